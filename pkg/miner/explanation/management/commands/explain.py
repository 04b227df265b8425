from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from explanation.although import derive_explanations
from explanation.exceptions import PrincipleError, PrinciplesFormatError, UnknownInstanceError
from explanation.rendering import RENDER_MODES
from explanation.types import PrincipleOrder
from explanation.utils import find_instance, learned_principles, read_principles, render_explanations
from learning.exceptions import KnowledgeBaseFormatError
from learning.utils import read_knowledge_base
from traces.exceptions import CorpusFormatError, InvariantError
from traces.utils import read_corpus


class Command(BaseCommand):
    help = "Derive the Although explanations of one behaviour instance."

    def add_arguments(self, parser):
        parser.add_argument("--corpus", required=True, type=Path)
        parser.add_argument("--kb", required=True, type=Path)
        principles = parser.add_mutually_exclusive_group()
        principles.add_argument(
            "--principles", type=Path, help=f"principles file (default: {settings.DEFAULT_PRINCIPLES_PATH})"
        )
        principles.add_argument(
            "--use-learned-principles", action="store_true", help="use the principles the knowledge base states"
        )
        parser.add_argument("--instance", required=True)
        parser.add_argument("--out", required=True, type=Path)
        parser.add_argument("--render", choices=RENDER_MODES, default="json")

    def handle(self, *args, **options):
        corpus = self._read(options["corpus"], read_corpus, CorpusFormatError, InvariantError)
        kb = self._read(options["kb"], read_knowledge_base, KnowledgeBaseFormatError)

        if options["use_learned_principles"]:
            principles, order = learned_principles(kb), PrincipleOrder()
        else:
            path = options["principles"] or settings.DEFAULT_PRINCIPLES_PATH
            principles, order = self._read(path, read_principles, PrinciplesFormatError)

        try:
            instance = find_instance(corpus, options["instance"])
            facts = derive_explanations(instance, principles, order, kb)
        except (UnknownInstanceError, PrincipleError) as error:
            raise CommandError(str(error))

        try:
            options["out"].write_text(render_explanations(facts, options["render"], kb), encoding="utf-8")
        except OSError as error:
            raise CommandError(f"cannot write {options['out']}: {error.strerror}")

        self.stdout.write(f"Wrote {len(facts)} explanations of {instance.id} to {options['out']}")

    @staticmethod
    def _read(path: Path, reader, *errors):
        try:
            return reader(path)
        except OSError as error:
            raise CommandError(f"cannot read {path}: {error.strerror}")
        except errors as error:
            raise CommandError(f"{path}: {error}")
