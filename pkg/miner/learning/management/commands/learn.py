from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from learning.exceptions import EmptyCorpusError, NoSuccessfulInstancesError
from learning.pipeline import learn_knowledge_base
from learning.utils import write_knowledge_base
from traces.exceptions import CorpusFormatError, InvariantError, TermSyntaxError
from traces.terms import parse_term
from traces.utils import read_corpus


class Command(BaseCommand):
    help = "Learn a knowledge base from a behaviour corpus."

    def add_arguments(self, parser):
        parser.add_argument("--corpus", required=True, type=Path)
        parser.add_argument("--out", required=True, type=Path)
        parser.add_argument("--plan-bound", type=int, help="plan length bound for the prevention filter")
        parser.add_argument(
            "--goal", action="append", metavar="TERM", help="goal proposition to use instead of the learned goal"
        )

    def handle(self, *args, **options):
        if options["plan_bound"] is not None and options["plan_bound"] < 0:
            raise CommandError("--plan-bound must not be negative")

        try:
            goal = None if options["goal"] is None else [parse_term(text) for text in options["goal"]]
        except TermSyntaxError as error:
            raise CommandError(f"--goal: {error}")

        try:
            corpus = read_corpus(options["corpus"])
        except OSError as error:
            raise CommandError(f"cannot read {options['corpus']}: {error.strerror}")
        except (CorpusFormatError, InvariantError) as error:
            raise CommandError(f"{options['corpus']}: {error}")

        try:
            kb = learn_knowledge_base(corpus, options["plan_bound"], goal)
        except (EmptyCorpusError, NoSuccessfulInstancesError) as error:
            raise CommandError(str(error))

        try:
            write_knowledge_base(options["out"], kb)
        except OSError as error:
            raise CommandError(f"cannot write {options['out']}: {error.strerror}")

        self.stdout.write(
            f"Learned {len(kb.fluents)} fluents, {len(kb.actions)} actions and "
            f"{len(kb.prevents)} preventions from {len(corpus)} instances"
        )
