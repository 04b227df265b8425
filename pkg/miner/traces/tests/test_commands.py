import io
import tempfile
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from traces.blocksworld import PREVENTING_P
from traces.utils import read_corpus


class GenerateCommandTestCase(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def generate(self, *args):
        stdout = io.StringIO()
        call_command("generate", *args, stdout=stdout)
        return stdout.getvalue()

    def test_generate_blocksworld(self):
        out = self.path / "bw.json"

        output = self.generate("--out", str(out), "--exploration", "0")

        corpus = read_corpus(out)
        self.assertEqual(len(corpus), 120)
        self.assertLessEqual(corpus.max_length, 4)
        self.assertIn("Wrote 120 instances", output)

    def test_generate_is_deterministic(self):
        first, second = self.path / "first.json", self.path / "second.json"

        self.generate("--out", str(first), "--inject", "prevention-a", "--seed", "5")
        self.generate("--out", str(second), "--inject", "prevention-a", "--seed", "5")

        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_seed_changes_the_corpus(self):
        first, second = self.path / "first.json", self.path / "second.json"

        self.generate("--out", str(first), "--seed", "1")
        self.generate("--out", str(second), "--seed", "2")

        self.assertNotEqual(first.read_bytes(), second.read_bytes())

    def test_generate_with_injection(self):
        out = self.path / "bw.json"

        self.generate("--out", str(out), "--inject", "prevention-b")

        self.assertTrue(any(PREVENTING_P in state for state in read_corpus(out).states()))

    def test_generate_figure2(self):
        out = self.path / "figure2.json"

        self.generate("--out", str(out), "--figure2")

        corpus = read_corpus(out)
        self.assertEqual([instance.id for instance in corpus], ["figure2"])

    def test_generate_micro_domain(self):
        out = self.path / "micro.json"

        self.generate("--domain", "microblock", "--out", str(out))

        corpus = read_corpus(out)
        self.assertEqual(corpus.class_id, "micro")
        self.assertEqual(len(corpus), 10)

    def test_micro_domain_rejects_injection(self):
        with self.assertRaises(CommandError):
            self.generate("--domain", "microblock", "--inject", "stacked", "--out", str(self.path / "x.json"))

    def test_unwritable_output(self):
        with self.assertRaises(CommandError):
            self.generate("--figure2", "--out", str(self.path / "missing" / "x.json"))
