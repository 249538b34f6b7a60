import random

import pytest

from pumplab import compile, determinize
from pumplab.corpus import random_regex, star_free_regex
from pumplab.errors import ResourceLimitError
from pumplab.pumping import _strings_up_to

CORPUS_SEED = 0xC0FFEE


@pytest.fixture(scope="session")
def corpus500():
    """500 random well-formed patterns over subsets of {0,1,a,b}, depth <= 4."""
    rng = random.Random(CORPUS_SEED)
    return [random_regex(rng) for _ in range(500)]


@pytest.fixture(scope="session")
def corpus100(corpus500):
    return corpus500[:100]


@pytest.fixture(scope="session")
def finite_corpus():
    """Star-free patterns: finite (sometimes empty) languages."""
    rng = random.Random(CORPUS_SEED + 1)
    return [star_free_regex(rng) for _ in range(60)]


CANONICAL_REGEXES = ["(1U0)*101(1U0)*", "1*01*01*", "10*1", "aabUa*b*", "ab"]


@pytest.fixture(scope="session")
def mpl_corpus(corpus500):
    """Desk-scale sub-corpus for minimum-pumping-length cross-validation.

    Sampled mode enumerates every language string up to 2|Q|+2, which is
    exponential for dense languages over large automata; members whose
    enumeration under the default bound is not cheap are excluded (this
    drops the dense embedded-occurrence example, whose exact mode is still
    covered elsewhere).
    """
    kept = []
    for regex in CANONICAL_REGEXES + corpus500:
        nfa = compile(regex)
        dfa = determinize(nfa)
        if dfa.state_count > 25:
            continue
        try:
            strings = _strings_up_to(nfa, 2 * dfa.state_count + 2, 200_000)
        except ResourceLimitError:
            continue
        if len(strings) > 1500:
            continue
        kept.append(regex)
    return kept


def shortlex_key(s):
    return (len(s), s)
