"""Acceptance suite.

One test per exit criterion: canonical example reproductions (exact
equality, each under one second) and corpus-wide property sweeps. Each test
prints a single PASS line on success (visible with -s; failures surface
through pytest as usual).
"""

import random
import time

import pytest
from fastapi.testclient import TestClient

from pumplab import (PumpSplit, accepts, compile, determinize, is_pumpable,
                     min_pumping_length_exact, min_pumping_length_sampled,
                     next_strings, open_enumeration, parse_ast,
                     parse_segments, pump, split_pumps, valid_splits)
from pumplab.corpus import dfa_language, nfa_language, oracle_language
from pumplab.pumping import _candidate_splits
from pumplab.service import create_app

from conftest import shortlex_key


def report(name):
    print(f"PASS {name}")


@pytest.fixture(scope="module")
def equivalence_sweep(corpus500):
    """Language slices through length 6 for oracle, NFA, and DFA routes."""
    start = time.perf_counter()
    rows = []
    for regex in corpus500:
        nfa = compile(regex)
        dfa = determinize(nfa)
        alphabet = "".join(sorted(nfa.alphabet))
        rows.append((regex,
                     oracle_language(parse_ast(regex), alphabet, 6),
                     nfa_language(nfa, 6),
                     dfa_language(dfa, 6)))
    elapsed = time.perf_counter() - start
    return rows, elapsed


def timed(limit=1.0):
    return _Timed(limit)


class _Timed:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            assert time.perf_counter() - self.start < self.limit
        return False


class TestExampleReproduction:
    def test_membership_of_embedded_occurrence(self):
        with timed():
            assert accepts(compile("(1U0)*101(1U0)*"), "1011") is True
        report("membership: (1U0)*101(1U0)* accepts 1011")

    def test_mpl_exact_two_zero_blocks(self):
        with timed():
            result = min_pumping_length_exact(determinize(compile("1*01*01*")))
        assert result.p == 3
        assert result.witness == "001"
        assert result.split == PumpSplit("00", "1", "")
        assert result.counterexample_for_p_minus_1 == "00"
        report("mpl exact: 1*01*01* -> p=3, witness 001, split (00,1,), "
               "counterexample 00")

    def test_mpl_exact_union_of_finite_and_infinite(self):
        with timed():
            result = min_pumping_length_exact(determinize(compile("aabUa*b*")))
        assert result.p == 1
        report("mpl exact: aabUa*b* -> p=1")

    def test_mpl_exact_zero_run_between_ones(self):
        with timed():
            result = min_pumping_length_exact(determinize(compile("10*1")))
        assert result.p == 3
        assert result.witness == "101"
        # Cross-checked against the brute-force split oracle.
        nfa = compile("10*1")
        assert not any(
            all(accepts(nfa, s[:i] + s[i:j] * k + s[j:]) for k in range(51))
            for s in ["11"]
            for i in range(2) for j in range(i + 1, 3) if j <= len(s))
        report("mpl exact: 10*1 -> p=3, witness 101")

    def test_segment_list_of_mixed_pattern(self):
        with timed():
            seg = parse_segments("a(caUac)c*cac")
        assert list(seg.items) == ["a", ".", "caUac", ".", "c", "*", ".",
                                   "c", ".", "a", ".", "c"]
        report("segments: a(caUac)c*cac -> printed list")

    def test_enumeration_starts_with_shortest(self):
        with timed():
            batch = next_strings(open_enumeration(compile("1*01*01*")), 4)
        assert batch.strings[0] == "00"
        assert batch.strings == ("00", "001", "010", "100")
        report("enumeration: 1*01*01* begins with 00")


class TestPropertySuites:
    def test_oracle_equivalence_sweep(self, equivalence_sweep):
        rows, elapsed = equivalence_sweep
        assert len(rows) == 500
        disagreements = [regex for regex, oracle, nfa, _ in rows if oracle != nfa]
        assert disagreements == []
        assert elapsed < 60.0
        report(f"oracle equivalence: 500 regexes x strings <=6, "
               f"0 disagreements, {elapsed:.1f}s")

    def test_determinization_equivalence_sweep(self, equivalence_sweep):
        rows, _ = equivalence_sweep
        disagreements = [regex for regex, _, nfa, dfa in rows if nfa != dfa]
        assert disagreements == []
        report("determinization equivalence: 500 regexes, 0 disagreements")

    def test_enumeration_completeness_and_order(self, corpus100):
        for regex in corpus100:
            nfa = compile(regex)
            expected = sorted(nfa_language(nfa, 5), key=shortlex_key)
            cursor = open_enumeration(nfa)
            got = []
            while not cursor.exhausted:
                batch = next_strings(cursor, 64)
                overflow = False
                for s in batch.strings:
                    if len(s) > 5:
                        overflow = True
                        break
                    got.append(s)
                if overflow:
                    break
            assert got == expected, regex
            keys = [shortlex_key(s) for s in got]
            assert keys == sorted(set(keys)), regex
        report("enumeration completeness/order: 100 regexes through length 5")

    def test_mpl_cross_validation(self, mpl_corpus, finite_corpus):
        for regex in mpl_corpus:
            nfa = compile(regex)
            dfa = determinize(nfa)
            exact = min_pumping_length_exact(dfa)
            sampled = min_pumping_length_sampled(nfa)
            assert exact.p == sampled.p, regex
            assert exact.witness == sampled.witness, regex
            assert exact.split == sampled.split, regex
            assert 1 <= exact.p <= dfa.state_count, regex
            if exact.p > 1:
                c = exact.counterexample_for_p_minus_1
                assert c is not None and accepts(nfa, c), regex
                assert len(c) >= exact.p - 1
                assert not is_pumpable(c, exact.p - 1, dfa), regex
            if exact.witness is not None:
                for i in range(11):
                    assert accepts(nfa, pump(exact.split, i)), (regex, i)
        for regex in finite_corpus:
            nfa = compile(regex)
            batch = next_strings(open_enumeration(nfa), 100_000)
            assert batch.exhausted, regex
            result = min_pumping_length_exact(determinize(nfa))
            if batch.strings:
                assert result.p == max(len(s) for s in batch.strings) + 1, regex
            else:
                assert result.p == 1, regex
        report(f"mpl cross-validation: sampled = exact on {len(mpl_corpus)} "
               f"members; bounds, counterexamples, witnesses, finite rule")

    def test_orbit_bound_soundness(self, corpus500):
        rng = random.Random(4242)
        checked = 0
        index = 0
        while checked < 100:
            regex = corpus500[index % len(corpus500)]
            index += 1
            nfa = compile(regex)
            dfa = determinize(nfa)
            strings = [s for s in next_strings(open_enumeration(nfa), 20).strings if s]
            if not strings:
                continue
            s = rng.choice(strings)
            splits = list(_candidate_splits(s, rng.randint(1, len(s))))
            if not splits:
                continue
            split = rng.choice(splits)
            orbit_verdict = split_pumps(dfa, split.x, split.y, split.z)
            brute = all(accepts(nfa, pump(split, i)) for i in range(51))
            assert orbit_verdict == brute, (regex, s, split)
            checked += 1
        report("orbit-bound soundness: 100 random triples vs i in 0..50 sweep")

    def test_service_statelessness(self):
        client = TestClient(create_app())
        payload = {"regex": "(aUb)*ab", "count": 12, "offset": 0}
        first = client.post("/api/strings", json=payload)
        second = client.post("/api/strings", json=payload)
        assert first.content == second.content
        long = first.json()["strings"]
        paged = []
        for offset, count in [(0, 4), (4, 4), (8, 4)]:
            paged += client.post("/api/strings",
                                 json={"regex": "(aUb)*ab", "count": count,
                                       "offset": offset}).json()["strings"]
        assert paged == long
        report("service statelessness: byte-identical repeats, pages tile")
