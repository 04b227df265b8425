import io
import json
import tempfile
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from learning.tests.helpers import blocksworld_kb, micro_kb
from learning.utils import serialize_knowledge_base
from traces.tests.helpers import figure2_corpus, micro_corpus
from traces.utils import write_corpus

from .helpers import FACT_JSON


class ExplainCommandTestCase(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name)
        self.corpus = self.path / "figure2.json"
        write_corpus(self.corpus, figure2_corpus())
        self.kb = self.path / "kb.json"
        self.kb.write_bytes(serialize_knowledge_base(blocksworld_kb()))
        self.out = self.path / "explanations.jsonl"

    def tearDown(self):
        self.directory.cleanup()

    def explain(self, *args, instance="figure2"):
        stdout = io.StringIO()
        call_command(
            "explain",
            "--corpus",
            str(self.corpus),
            "--kb",
            str(self.kb),
            "--instance",
            instance,
            "--out",
            str(self.out),
            *args,
            stdout=stdout,
        )
        return stdout.getvalue()

    def test_default_principles(self):
        output = self.explain()

        lines = self.out.read_text().splitlines()
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[1], FACT_JSON)
        self.assertEqual([json.loads(line)["kind"] for line in lines[2:]], ["although5", "although5"])
        self.assertIn("Wrote 4 explanations of figure2", output)

    def test_text_rendering(self):
        self.explain("--render", "text")

        lines = self.out.read_text().splitlines()
        self.assertTrue(all(line.startswith("Although ") for line in lines))
        self.assertIn("however, it started [Move(A,B,P2), Move(B,P1,C)]", lines[2])

    def test_principles_file(self):
        principles = self.path / "principles.json"
        principles.write_text(json.dumps({"principles": ["desired(on(b,c))"]}))

        self.explain("--principles", str(principles))

        self.assertEqual(self.out.read_text(), "")

    def test_unknown_instance(self):
        with self.assertRaisesMessage(CommandError, "no instance 'bw000'"):
            self.explain(instance="bw000")

    def test_malformed_principles(self):
        principles = self.path / "principles.json"
        principles.write_text(json.dumps({"principles": ["desired(on(a,b))"], "ranks": {"desired(clear(a))": 2}}))

        with self.assertRaisesMessage(CommandError, "ranked principles are not listed"):
            self.explain("--principles", str(principles))

    def test_principle_over_unknown_atoms(self):
        principles = self.path / "principles.json"
        principles.write_text(json.dumps({"principles": ["desired(on(a,d))"]}))

        with self.assertRaisesMessage(CommandError, "on(a,d) is not a fluent proposition"):
            self.explain("--principles", str(principles))

    def test_missing_knowledge_base(self):
        self.kb.unlink()

        with self.assertRaises(CommandError):
            self.explain()

    def test_principle_sources_are_exclusive(self):
        with self.assertRaises(CommandError):
            self.explain("--principles", str(self.path / "principles.json"), "--use-learned-principles")

    def test_learned_principles(self):
        write_corpus(self.corpus, micro_corpus())
        self.kb.write_bytes(serialize_knowledge_base(micro_kb()))

        output = self.explain("--use-learned-principles", instance="spoiled0")

        threatened = [json.loads(line)["pset1"][0] for line in self.out.read_text().splitlines()]
        self.assertEqual(
            threatened,
            ["principle(desired(g))", "principle(mandatory(free))", "principle(undesired(q))"],
        )
        self.assertIn("Wrote 3 explanations of spoiled0", output)


class PipelineTestCase(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def run_pipeline(self, name):
        corpus, figure2, kb = self.path / "bw.json", self.path / "figure2.json", self.path / "kb.json"
        out = self.path / f"{name}.jsonl"
        quiet = {"stdout": io.StringIO()}

        call_command("generate", "--out", str(corpus), **quiet)
        call_command("generate", "--figure2", "--out", str(figure2), **quiet)
        call_command("learn", "--corpus", str(corpus), "--out", str(kb), **quiet)
        call_command(
            "explain", "--corpus", str(figure2), "--kb", str(kb), "--instance", "figure2", "--out", str(out), **quiet
        )
        return out.read_bytes()

    def test_pipeline_is_deterministic(self):
        first = self.run_pipeline("first")

        self.assertEqual(first, self.run_pipeline("second"))
        self.assertEqual(first.decode().splitlines()[1], FACT_JSON)
