from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from traces.blocksworld import BlocksWorld, micro_domain_corpus
from traces.types import Corpus, InjectionKind, InjectionScenario
from traces.utils import write_corpus


class Command(BaseCommand):
    help = "Generate a behaviour corpus: the blocks world robot or the micro domain."

    def add_arguments(self, parser):
        parser.add_argument("--domain", choices=["blocksworld", "microblock"], default="blocksworld")
        parser.add_argument("--inject", choices=["prevention-a", "prevention-b", "stacked"])
        parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
        parser.add_argument(
            "--exploration",
            type=int,
            help=f"random moves before solving (default: {settings.BLOCKS_WORLD_EXPLORATION_STEPS})",
        )
        parser.add_argument(
            "--figure2", action="store_true", help="write only the replay whose first move misplaces block a"
        )
        parser.add_argument("--out", required=True, type=Path)

    def handle(self, *args, **options):
        if options["domain"] == "microblock":
            if options["inject"] or options["figure2"]:
                raise CommandError("--inject and --figure2 only apply to the blocksworld domain")
            corpus = micro_domain_corpus()
        elif options["figure2"]:
            corpus = Corpus("bw", [BlocksWorld().figure2_instance()])
        else:
            kind = InjectionKind((options["inject"] or InjectionKind.NONE).replace("-", "_"))
            scenario = InjectionScenario(kind, options["seed"])
            corpus = BlocksWorld().generate_corpus(scenario, exploration=options["exploration"])

        try:
            write_corpus(options["out"], corpus)
        except OSError as error:
            raise CommandError(f"cannot write {options['out']}: {error.strerror}")

        self.stdout.write(f"Wrote {len(corpus)} instances to {options['out']}")
