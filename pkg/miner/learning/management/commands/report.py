import io
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from learning.exceptions import KnowledgeBaseFormatError
from learning.types import KnowledgeBase
from learning.utils import parse_knowledge_base, serialize_knowledge_base
from rich.console import Console
from rich.table import Table
from rich.text import Text
from traces.terms import display_term, sort_terms

REPORT_WIDTH = 120


def _terms(terms) -> str:
    return ", ".join(display_term(term) for term in sort_terms(terms))


def _pair(first, second) -> str:
    return f"{display_term(first)} / {display_term(second)}"


def report_sections(kb: KnowledgeBase) -> list[tuple[str, list[tuple[str, ...]]]]:
    """Title and rows of every section of the report, in display order."""
    return [
        ("Static propositions", [(display_term(term),) for term in sort_terms(kb.statics)]),
        ("Fluent propositions", [(display_term(term),) for term in sort_terms(kb.fluents)]),
        ("Goal", [(display_term(term),) for term in sort_terms(kb.goal)]),
        ("Desired", [(display_term(term),) for term in sort_terms(kb.desired_entities)]),
        ("Undesired", [(display_term(term),) for term in sort_terms(kb.undesired_props | kb.undesired_actions)]),
        ("Neutral", [(display_term(term),) for term in sort_terms(kb.neutral_props | kb.neutral_actions)]),
        (
            "Mandatory" if kb.mandatory_verified else "Mandatory (unverified)",
            [(display_term(term),) for term in sort_terms(kb.mandatory)],
        ),
        (
            "Action models",
            [
                (
                    display_term(action),
                    _terms(kb.precond.get(action, ())),
                    _terms(kb.pos_effects.get(action, ())),
                    _terms(kb.neg_effects.get(action, ())),
                )
                for action in sort_terms(kb.actions)
            ],
        ),
        ("Incompatible", sorted((_pair(*sort_terms(couple)),) for couple in kb.incompatible)),
        ("Incompatible with action", sorted((_pair(prop, action),) for prop, action in kb.incompatible_prop_action)),
        ("Prevents", sorted((_pair(first, second),) for first, second in kb.prevents)),
        ("Must precede", sorted((_pair(first, second),) for first, second in kb.must_precede)),
        ("Defining", [(display_term(atom), _terms(kb.defining[atom])) for atom in sort_terms(kb.defining)]),
    ]


COLUMNS = {
    "Action models": ("Action", "Preconditions", "Adds", "Deletes"),
    "Defining": ("Proposition", "Defined by"),
}


def render_report(kb: KnowledgeBase) -> str:
    console = Console(record=True, file=io.StringIO(), width=REPORT_WIDTH)
    for title, rows in report_sections(kb):
        heading = f"{title} ({len(rows)})"
        if not rows:
            console.print(heading, "(none)", "", sep="\n", markup=False)
            continue
        columns = COLUMNS.get(title)
        console.print(heading, markup=False)
        table = Table(show_header=columns is not None)
        for column in columns or ("",):
            table.add_column(column)
        for row in rows:
            # terms may contain brackets, which rich would read as markup
            table.add_row(*(Text(cell) for cell in row))
        console.print(table)
    return console.export_text()


class Command(BaseCommand):
    help = "Print the sections of a knowledge base."

    def add_arguments(self, parser):
        parser.add_argument("--kb", required=True, type=Path)
        parser.add_argument("--format", choices=["text", "json"], default="text")

    def handle(self, *args, **options):
        try:
            kb = parse_knowledge_base(options["kb"].read_bytes())
        except OSError as error:
            raise CommandError(f"cannot read {options['kb']}: {error.strerror}")
        except KnowledgeBaseFormatError as error:
            raise CommandError(f"{options['kb']}: {error}")

        if options["format"] == "json":
            self.stdout.write(serialize_knowledge_base(kb).decode())
        else:
            self.stdout.write(render_report(kb), ending="")
