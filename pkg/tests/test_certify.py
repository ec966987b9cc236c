import warnings
from fractions import Fraction
from math import gcd, isqrt

import pytest

from rankcert.certify import (
    Certificate,
    Deg1Evidence,
    GENUS_TOO_SMALL,
    INFINITY_WITNESS,
    MalformedReportError,
    NEEDS_THETA_DATA,
    NO_DEG1_CLASS,
    OrbitReport,
    PATH_DIRECT,
    PATH_TRANSITIVITY,
    RATIONAL_THETA,
    RATIONAL_TWO_TORSION,
    VERDICT_INCONCLUSIVE,
    VERDICT_RANK_AT_LEAST_ONE,
    certificate_doc,
    certificate_from_doc,
    decide_from_irreducibility,
    decide_from_orbits,
    decide_without_theta,
    find_deg1_class,
    render_certificate,
    verify_certificate,
)
from rankcert.exactpoly import RatPoly
from rankcert.weierstrass import build_curve

ASSERTED = Deg1Evidence("user-assertion", note="asserted")
QUARTIC_REPORT = OrbitReport(genus=3, j2_orbits=(3, 12, 48), theta_odd=(4, 24), theta_even=(12, 24))


class TestDecideFromOrbits:
    def test_certifies_clean_report(self):
        cert = decide_from_orbits(QUARTIC_REPORT, ASSERTED)
        assert cert.verdict == VERDICT_RANK_AT_LEAST_ONE
        assert cert.path == PATH_DIRECT
        assert cert.reasons == ()

    def test_rational_two_torsion(self):
        rep = OrbitReport(3, (1, 2, 12, 48), (4, 24), (12, 24))
        cert = decide_from_orbits(rep, ASSERTED)
        assert cert.verdict == VERDICT_INCONCLUSIVE
        assert cert.reason_kinds() == (RATIONAL_TWO_TORSION,)

    def test_missing_evidence(self):
        rep = OrbitReport(3, (63,), (28,), (36,))
        cert = decide_from_orbits(rep, None)
        assert cert.reason_kinds() == (NO_DEG1_CLASS,)

    def test_rational_theta_both_parities(self):
        rep = OrbitReport(2, (15,), (1, 5), (1, 9))
        cert = decide_from_orbits(rep, ASSERTED)
        assert cert.reason_kinds() == (RATIONAL_THETA,)
        assert "odd and even" in cert.reasons[0].witness

    def test_theta_witness_substitutes_for_data(self):
        rep = OrbitReport(2, (5, 10))
        cert = decide_from_orbits(rep, ASSERTED, theta_witness=INFINITY_WITNESS)
        assert cert.reason_kinds() == (RATIONAL_THETA,)
        assert cert.reasons[0].witness == INFINITY_WITNESS

    def test_missing_theta_rejected(self):
        with pytest.raises(MalformedReportError):
            decide_from_orbits(OrbitReport(2, (15,)), ASSERTED)

    def test_malformed_sums_rejected(self):
        with pytest.raises(MalformedReportError):
            decide_from_orbits(OrbitReport(3, (3, 12, 40), (4, 24), (12, 24)), ASSERTED)
        with pytest.raises(MalformedReportError):
            decide_from_orbits(OrbitReport(3, (3, 12, 48), (4, 23), (12, 24)), ASSERTED)

    def test_monotone(self):
        # removing the reason-triggering orbit never downgrades the verdict
        bad = OrbitReport(2, (1, 14), (6,), (10,))
        good = OrbitReport(2, (15,), (6,), (10,))
        assert decide_from_orbits(bad, ASSERTED).verdict == VERDICT_INCONCLUSIVE
        assert decide_from_orbits(good, ASSERTED).verdict == VERDICT_RANK_AT_LEAST_ONE


class TestDecideFromIrreducibility:
    def test_certifies(self):
        cert = decide_from_irreducibility(True, 3, ASSERTED, j2_orbits=(63,))
        assert cert.verdict == VERDICT_RANK_AT_LEAST_ONE
        assert cert.path == PATH_TRANSITIVITY

    def test_genus_one_blocked(self):
        cert = decide_from_irreducibility(True, 1, ASSERTED)
        assert cert.verdict == VERDICT_INCONCLUSIVE
        assert cert.reason_kinds() == (GENUS_TOO_SMALL,)

    def test_reducible_defers(self):
        cert = decide_from_irreducibility(False, 2, ASSERTED)
        assert cert.reason_kinds() == (NEEDS_THETA_DATA,)

    def test_all_failures_listed(self):
        cert = decide_from_irreducibility(False, 1, None)
        assert set(cert.reason_kinds()) == {NEEDS_THETA_DATA, GENUS_TOO_SMALL, NO_DEG1_CLASS}


class TestDecideWithoutTheta:
    def test_always_inconclusive(self):
        rep = OrbitReport(2, (15,))
        cert = decide_without_theta(rep, ASSERTED)
        assert cert.verdict == VERDICT_INCONCLUSIVE
        assert NEEDS_THETA_DATA in cert.reason_kinds()

    def test_reports_two_torsion(self):
        rep = OrbitReport(2, (1, 2, 12))
        cert = decide_without_theta(rep, ASSERTED)
        assert RATIONAL_TWO_TORSION in cert.reason_kinds()


class TestFindDeg1Class:
    def test_odd_model(self):
        ev = find_deg1_class(build_curve(RatPoly([1, -1, 0, 0, 0, 1])))
        assert ev.kind == "infinite-place"

    def test_even_model_square_lc(self):
        ev = find_deg1_class(build_curve(RatPoly([1, 1, 0, 0, 0, 0, 1])))
        assert ev.kind == "infinite-place"

    def test_small_search_exhausted(self):
        # oracle: check directly that no x of height <= 2 gives a square
        f = RatPoly([5, 0, 2, 0, 0, 0, 3])
        seen = set()
        for p in range(-2, 3):
            for q in (1, 2):
                if gcd(abs(p), q) == 1:
                    seen.add(Fraction(p, q))
        for x in seen:
            v = f(x)
            assert v < 0 or isqrt(v.numerator) ** 2 != v.numerator or isqrt(v.denominator) ** 2 != v.denominator
        assert find_deg1_class(build_curve(f), height_bound=2) is None

    def test_finds_rational_point(self):
        # y^2 = 2x^6 + 7: x = -1 (first in height order) gives y = 3
        f = RatPoly([7, 0, 0, 0, 0, 0, 2])
        ev = find_deg1_class(build_curve(f), height_bound=3)
        assert ev.kind == "rational-point"
        assert ev.x == -1 and ev.y == 3
        assert f(ev.x) == ev.y ** 2


class TestSerialization:
    def test_doc_roundtrip(self):
        cert = decide_from_orbits(QUARTIC_REPORT, ASSERTED, inputs_digest="a" * 64)
        doc = certificate_doc(cert, subject={"kind": "orbit-data"})
        assert certificate_from_doc(doc) == cert

    def test_roundtrip_with_hashes_and_labeling(self):
        cert = decide_from_irreducibility(
            True, 2, ASSERTED, j2_orbits=(15,), hashes=(("chi", "b" * 64),), labeling=1,
            inputs_digest="c" * 64,
        )
        assert certificate_from_doc(certificate_doc(cert)) == cert

    def test_render_deterministic(self):
        cert = decide_from_orbits(QUARTIC_REPORT, ASSERTED)
        assert render_certificate(cert) == render_certificate(cert)
        assert "RankAtLeastOne" in render_certificate(cert)


class TestVerifier:
    def test_accepts_emitted(self):
        for cert in (
            decide_from_orbits(QUARTIC_REPORT, ASSERTED),
            decide_from_orbits(OrbitReport(3, (1, 14, 48), (4, 24), (12, 24)), None),
            decide_from_irreducibility(True, 3, ASSERTED, j2_orbits=(63,)),
            decide_from_irreducibility(False, 2, ASSERTED, j2_orbits=(5, 10)),
            decide_without_theta(OrbitReport(2, (1, 2, 12)), ASSERTED),
        ):
            ok, problems = verify_certificate(certificate_doc(cert))
            assert ok, problems

    def test_rejects_tampered_verdict(self):
        cert = decide_from_orbits(OrbitReport(3, (1, 14, 48), (4, 24), (12, 24)), ASSERTED)
        doc = certificate_doc(cert)
        doc["verdict"] = VERDICT_RANK_AT_LEAST_ONE
        ok, problems = verify_certificate(doc)
        assert not ok
        assert any("replay" in p or "certified" in p for p in problems)

    def test_rejects_bad_sums(self):
        cert = decide_from_orbits(QUARTIC_REPORT, ASSERTED)
        doc = certificate_doc(cert)
        doc["orbits"]["j2"] = [3, 12, 47]
        ok, problems = verify_certificate(doc)
        assert not ok

    def test_rejects_inconsistent_irreducibility_flag(self):
        cert = decide_from_irreducibility(True, 2, ASSERTED, j2_orbits=(15,))
        doc = certificate_doc(cert)
        doc["orbits"]["j2"] = [5, 10]
        ok, problems = verify_certificate(doc)
        assert not ok

    def test_rejects_missing_fields(self):
        ok, problems = verify_certificate({"schema_version": 1})
        assert not ok


def test_transitivity_implies_direct_on_real_data():
    # whenever the shortcut concludes and theta data is computed anyway, the
    # direct criterion concludes too
    from rankcert.cli import pipeline_hyperelliptic

    f = RatPoly([1, 1, 0, 0, 0, 0, 1])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        short, _ = pipeline_hyperelliptic(f)
        full, _ = pipeline_hyperelliptic(f, full_theta=True)
    assert short.verdict == VERDICT_RANK_AT_LEAST_ONE
    assert short.path == PATH_TRANSITIVITY
    assert full.verdict == VERDICT_RANK_AT_LEAST_ONE
    assert full.path == PATH_DIRECT
