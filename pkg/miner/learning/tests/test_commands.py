import io
import json
import tempfile
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from learning.exceptions import KnowledgeBaseFormatError
from learning.management.commands.report import report_sections
from learning.types import KnowledgeBase
from learning.utils import parse_knowledge_base, read_knowledge_base, serialize_knowledge_base
from traces.terms import Term
from traces.tests.helpers import micro_corpus
from traces.utils import write_corpus

from .helpers import micro_kb


class KnowledgeBaseFileTestCase(SimpleTestCase):
    def test_keys_are_sorted(self):
        data = json.loads(serialize_knowledge_base(micro_kb()))

        self.assertEqual(list(data), sorted(data))
        self.assertEqual(data["prevents"][:2], [["g", "g"], ["q", "free"]])
        self.assertEqual(data["incompatible"], [["free", "q"], ["g", "q"]])
        self.assertEqual(data["precond"], {"makeg": ["free"], "spoil": ["free"]})
        self.assertEqual(data["defining"], {"g": ["free"]})

    def test_parse_serialized_knowledge_base(self):
        kb = micro_kb()

        self.assertEqual(parse_knowledge_base(serialize_knowledge_base(kb)), kb)

    def test_unknown_action_in_models(self):
        data = json.loads(serialize_knowledge_base(micro_kb()))
        data["precond"]["fly"] = []

        with self.assertRaises(KnowledgeBaseFormatError) as context:
            parse_knowledge_base(json.dumps(data))

        self.assertIn("precond describes unknown actions: fly", str(context.exception))

    def test_self_incompatibility(self):
        data = json.loads(serialize_knowledge_base(micro_kb()))
        data["incompatible"].append(["q", "q"])

        with self.assertRaises(KnowledgeBaseFormatError):
            parse_knowledge_base(json.dumps(data))

    def test_malformed_key(self):
        data = json.loads(serialize_knowledge_base(micro_kb()))
        data["defining"]["G"] = ["free"]

        with self.assertRaises(KnowledgeBaseFormatError) as context:
            parse_knowledge_base(json.dumps(data))

        self.assertIn("Invalid key 'G': expected a lowercase identifier", str(context.exception))


class LearnCommandTestCase(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name)
        self.corpus = self.path / "micro.json"
        write_corpus(self.corpus, micro_corpus())

    def tearDown(self):
        self.directory.cleanup()

    def test_learn(self):
        out = self.path / "kb.json"
        stdout = io.StringIO()

        call_command("learn", "--corpus", str(self.corpus), "--out", str(out), "--goal", "g", stdout=stdout)

        self.assertEqual(read_knowledge_base(out), micro_kb())
        self.assertIn("from 10 instances", stdout.getvalue())

    def test_learn_is_deterministic(self):
        first, second = self.path / "first.json", self.path / "second.json"

        call_command("learn", "--corpus", str(self.corpus), "--out", str(first), stdout=io.StringIO())
        call_command("learn", "--corpus", str(self.corpus), "--out", str(second), stdout=io.StringIO())

        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_learned_goal(self):
        out = self.path / "kb.json"

        call_command("learn", "--corpus", str(self.corpus), "--out", str(out), stdout=io.StringIO())

        self.assertEqual(read_knowledge_base(out).goal, {Term("free"), Term("g")})

    def test_malformed_goal(self):
        with self.assertRaises(CommandError):
            call_command("learn", "--corpus", str(self.corpus), "--out", str(self.path / "kb.json"), "--goal", "G")

    def test_missing_corpus(self):
        with self.assertRaises(CommandError):
            call_command("learn", "--corpus", str(self.path / "missing.json"), "--out", str(self.path / "kb.json"))

    def test_malformed_corpus(self):
        self.corpus.write_text('{"class": "micro", "instances": [{"id": 1}]}')

        with self.assertRaises(CommandError):
            call_command("learn", "--corpus", str(self.corpus), "--out", str(self.path / "kb.json"))

    def test_negative_plan_bound(self):
        with self.assertRaises(CommandError):
            call_command(
                "learn", "--corpus", str(self.corpus), "--out", str(self.path / "kb.json"), "--plan-bound", "-1"
            )


class ReportCommandTestCase(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.kb = Path(self.directory.name) / "kb.json"
        self.kb.write_bytes(serialize_knowledge_base(micro_kb()))

    def tearDown(self):
        self.directory.cleanup()

    def report(self, *args):
        stdout = io.StringIO()
        call_command("report", "--kb", str(self.kb), *args, stdout=stdout)
        return stdout.getvalue()

    def test_text_report(self):
        output = self.report()
        lines = [line.rstrip() for line in output.splitlines()]

        self.assertIn("Goal (1)", lines)
        self.assertIn("Fluent propositions (3)", lines)
        self.assertIn("Undesired (2)", lines)
        self.assertIn("Spoil", output)
        self.assertIn("Prevents (10)", lines)
        self.assertIn("Q / Free", output)
        self.assertIn("Defining (1)", lines)

    def test_empty_sections(self):
        output = self.report()

        self.assertIn("Must precede (0)\n(none)", output)
        self.assertIn("Static propositions (0)\n(none)", output)

    def test_empty_knowledge_base(self):
        self.kb.write_bytes(serialize_knowledge_base(KnowledgeBase()))

        output = self.report()

        titles = [title for title, _ in report_sections(KnowledgeBase())]
        self.assertEqual(len(titles), 13)
        self.assertIn("Mandatory (unverified)", titles)
        for title in titles:
            with self.subTest(title=title):
                self.assertIn(f"{title} (0)\n(none)", output)
        self.assertEqual(output.count("(none)"), 13)

    def test_json_report(self):
        self.assertEqual(self.report("--format", "json"), self.kb.read_text() + "\n")

    def test_malformed_knowledge_base(self):
        self.kb.write_text("{}")

        with self.assertRaises(CommandError):
            self.report()

    def test_malformed_key(self):
        data = json.loads(serialize_knowledge_base(micro_kb()))
        data["defining"]["G"] = ["free"]
        self.kb.write_text(json.dumps(data))

        with self.assertRaises(CommandError) as context:
            self.report()

        self.assertIn("Invalid key 'G'", str(context.exception))
