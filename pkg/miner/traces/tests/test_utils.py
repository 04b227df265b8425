import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase
from traces.exceptions import CorpusFormatError, InvariantError
from traces.terms import Term, parse_term
from traces.types import BehaviorInstance, Corpus, State
from traces.utils import parse_corpus, read_corpus, serialize_corpus, transitions, write_corpus

CORPUS = {
    "class": "micro",
    "instances": [
        {"id": "ok0", "states": [["free"], ["g", "free"]], "actions": ["makeg"]},
        {"id": "spoiled0", "states": [["free"], ["q"]], "actions": ["spoil"], "successful": False},
    ],
}


class CorpusFileTestCase(SimpleTestCase):
    def test_parse_corpus(self):
        corpus = parse_corpus(json.dumps(CORPUS))

        self.assertEqual(corpus.class_id, "micro")
        self.assertEqual(len(corpus), 2)
        ok, spoiled = corpus
        self.assertEqual(ok.states[1].props, frozenset({Term("free"), Term("g")}))
        self.assertEqual(ok.actions, (Term("makeg"),))
        self.assertTrue(ok.successful)
        self.assertFalse(spoiled.successful)

    def test_serialize_corpus_is_canonical(self):
        content = serialize_corpus(parse_corpus(json.dumps(CORPUS)))

        self.assertEqual(
            content,
            b'{"class":"micro","instances":['
            b'{"id":"ok0","states":[["free"],["free","g"]],"actions":["makeg"]},'
            b'{"id":"spoiled0","states":[["free"],["q"]],"actions":["spoil"],"successful":false}]}',
        )

    def test_write_then_read_corpus(self):
        corpus = parse_corpus(json.dumps(CORPUS))

        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "corpus.json"
            write_corpus(path, corpus)

            self.assertEqual(read_corpus(path), corpus)

    def test_malformed_json(self):
        with self.assertRaises(CorpusFormatError):
            parse_corpus('{"class": "micro", ')

    def test_wrong_number_of_actions(self):
        data = {"class": "x", "instances": [{"id": "i", "states": [["p"], ["q"]], "actions": []}]}

        with self.assertRaises(CorpusFormatError) as context:
            parse_corpus(json.dumps(data))

        self.assertIn("0 actions for 2 states", str(context.exception))

    def test_non_canonical_term(self):
        data = {"class": "x", "instances": [{"id": "i", "states": [["on(a, b)"]], "actions": []}]}

        with self.assertRaises(CorpusFormatError) as context:
            parse_corpus(json.dumps(data))

        self.assertIn("instances[0].states[0][0]", str(context.exception))

    def test_duplicate_atom_in_state(self):
        data = {"class": "x", "instances": [{"id": "i", "states": [["p", "p"]], "actions": []}]}

        with self.assertRaises(CorpusFormatError):
            parse_corpus(json.dumps(data))

    def test_duplicate_instance_ids(self):
        instance = {"id": "i", "states": [["p"]], "actions": []}

        with self.assertRaises(CorpusFormatError) as context:
            parse_corpus(json.dumps({"class": "x", "instances": [instance, instance]}))

        self.assertIn("duplicate instance id 'i'", str(context.exception))

    def test_missing_states(self):
        data = {"class": "x", "instances": [{"id": "i", "states": [], "actions": []}]}

        with self.assertRaises(CorpusFormatError):
            parse_corpus(json.dumps(data))


class TraceModelTestCase(SimpleTestCase):
    def test_transitions(self):
        instance = BehaviorInstance.from_props(
            "i", [{Term("p")}, {Term("q")}, {Term("r")}], [Term("a"), Term("b")]
        )

        steps = transitions(instance)

        self.assertEqual([step.action for step in steps], [Term("a"), Term("b")])
        self.assertEqual([(step.before.index, step.after.index) for step in steps], [(0, 1), (1, 2)])
        self.assertEqual(instance.length, 2)
        self.assertEqual(instance.final_state.props, frozenset({Term("r")}))

    def test_single_state_instance(self):
        instance = BehaviorInstance.from_props("i", [{Term("p")}])

        self.assertEqual(instance.length, 0)
        self.assertEqual(transitions(instance), [])

    def test_instance_invariants(self):
        with self.assertRaises(InvariantError):
            BehaviorInstance.from_props("i", [])
        with self.assertRaises(InvariantError):
            BehaviorInstance.from_props("i", [{Term("p")}], [Term("a")])
        with self.assertRaises(InvariantError):
            BehaviorInstance("i", (State(1, frozenset()),))
        with self.assertRaises(InvariantError):
            State(-1)

    def test_corpus_rejects_duplicate_ids(self):
        instance = BehaviorInstance.from_props("i", [{Term("p")}])

        with self.assertRaises(InvariantError):
            Corpus("x", [instance, instance])

    def test_get_instance(self):
        corpus = parse_corpus(json.dumps(CORPUS))

        self.assertEqual(corpus.get_instance("spoiled0").actions, (parse_term("spoil"),))
        with self.assertRaises(KeyError):
            corpus.get_instance("missing")
