"""The twelve acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line.  Run the file directly
(``python tests/test_acceptance.py``) to get just those lines.
"""
import sys

import pytest

from fintop.verify import (
    PUBLISHED_COUNTS,
    heredity_sweep,
    suite_enumeration,
    suite_hulls,
    suite_initial_fiber,
    suite_lmp,
    suite_omega,
    suite_pinch,
    suite_prime_decomp,
    suite_retraction,
    suite_t0,
    suite_towers,
)


def _tagged(report, tag):
    return [f for f in report.failures if f.startswith(tag)]


def prime_decomposition():
    r = suite_prime_decomp(bound=5)
    return r.passed and r.checked == sum(PUBLISHED_COUNTS[n] for n in range(1, 6)), r.summary()


def retraction():
    r = suite_retraction(bound=6)
    return r.passed and r.checked > 0, f"{r.summary()}; {r.notes['prime_spaces']} prime spaces"


def pinch_order():
    r = suite_pinch(bound=3)
    bad = _tagged(r, "order")
    return not bad and r.notes["order_checks"] > 0, f"{r.notes['order_checks']} triples, {len(bad)} failures"


def pinch_quotient():
    r = suite_pinch(bound=3)
    bad = _tagged(r, "quotient")
    return not bad and r.notes["quotient_checks"] > 0, f"{r.notes['quotient_checks']} cases, {len(bad)} failures"


def heredity():
    r = heredity_sweep(6, 3, 3)
    n = r.notes
    ok = r.passed and not n["converse_counterexamples"]
    return ok, (f"{r.checked} closures ({n['distinct_closures']} distinct), "
                f"{len(r.failures)} forward failures, "
                f"{len(n['converse_counterexamples'])} converse counterexamples")


def t0_reflection():
    r = suite_t0(bound=5)
    ok = r.passed and r.notes["r0_shadow_closures"] > 0
    return ok, f"{r.summary()}; shadow on {r.notes['r0_shadow_closures']} closures"


def hull_oracles():
    r = suite_hulls(bound=3, family_bound=2, copies=3)
    return r.passed and r.checked > 0, r.summary()


def towers():
    r = suite_towers(bound=4)
    return r.passed and r.notes["towers"] > 0, f"{r.summary()}; {r.notes['towers']} towers"


def p_predicate():
    r = suite_lmp(bound=3)
    return r.passed and r.notes["p_true"] > 0, r.summary()


def initial_fiber():
    r = suite_initial_fiber(bound=3)
    return r.passed and r.notes["maps"] > 0, r.summary()


def omega():
    r = suite_omega(instances=100, law_cases=1000, seed=0)
    return r.passed, r.summary()


def enumeration():
    r = suite_enumeration(bound=4)
    again = suite_enumeration(bound=4)
    ok = r.passed and r.to_json() == again.to_json()
    return ok, f"{r.summary()}; counts {r.notes['counts']}"


CRITERIA = [
    ("1. prime decomposition on all spaces up to 5 points", prime_decomposition),
    ("2. prime retractions on prime spaces up to 6 points", retraction),
    ("3. glued pinch finer than initial pinch on 3-point universe", pinch_order),
    ("4. pinched quotient for closed non-open b on 3-point universe", pinch_quotient),
    ("5. heredity sweep over all seed subsets", heredity),
    ("6. T0-reflection flags and membership shadow", t0_reflection),
    ("7. hull oracles against explicit constructions", hull_oracles),
    ("8. towers: sizes, embeddings and level base", towers),
    ("9. P-predicate reduction and initial source", p_predicate),
    ("10. initial maps with a singleton fibre", initial_fiber),
    ("11. cofinite fragment witnesses and set laws", omega),
    ("12. enumeration counts and stable listings", enumeration),
]


def _line(name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split(".")[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(name, *check()) for name, check in CRITERIA]
    for name, ok, detail in results:
        print(_line(name, ok, detail))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
