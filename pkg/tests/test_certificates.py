"""Primality tests, the certify ladder, and certificate round-trips."""
import json
import math
import random

import pytest

from prothforge.certificates import (
    Certificate,
    FactorFormClaim,
    ProthForm,
    Status,
    TestId,
    auto_decompose,
    certify,
    cube_bound_j,
    decompose,
    fermat_only_2kp,
    fermat_only_2kp2,
    fermat_only_2kp3,
    grau_j,
    grau_phi,
    max_admissible_j,
    one_shot,
    one_shot_j,
    pocklington_factor_form,
    pocklington_kpn,
    proth_1878,
    run_test,
    seven_bound_j,
    verify_certificate,
)
from prothforge.numtheory import is_probable_prime, sieve_range

from helpers import one_shot_base_census


F_2_107_3 = ProthForm(K=2, p=107, n=3)      # N = 2450087
F_2_3_17 = ProthForm(K=2, p=3, n=17)        # N = 258280327
F_14_3_18 = ProthForm(K=14, p=3, n=18)      # N = 5423886847
F_13 = ProthForm(K=3, p=2, n=2)             # N = 13


def test_form_validation():
    assert F_2_107_3.N == 2450087
    with pytest.raises(ValueError):
        ProthForm(K=0, p=3, n=1)
    with pytest.raises(ValueError):
        ProthForm(K=1, p=4, n=2)
    with pytest.raises(ValueError):
        ProthForm(K=6, p=3, n=1)  # p | K: n not maximal
    with pytest.raises(ValueError):
        ProthForm(K=1, p=2, n=0)


def test_decompose_pins():
    assert decompose(2450087, 107) == F_2_107_3
    assert decompose(13, 3) == ProthForm(K=4, p=3, n=1)
    assert decompose(21, 2) == ProthForm(K=5, p=2, n=2)
    with pytest.raises(ValueError):
        decompose(14, 2)
    with pytest.raises(ValueError):
        decompose(21, 7)


def test_auto_decompose_pins():
    assert auto_decompose(15, 10) == ProthForm(K=2, p=7, n=1)
    assert auto_decompose(65537, 10) == ProthForm(K=1, p=2, n=16)
    assert auto_decompose(2450087, 200) == F_2_107_3
    # both prime cofactors exceed the trial-division bound
    assert auto_decompose(2 * 10007 * 10009 + 1) is None


def test_proth_pins():
    assert proth_1878(F_13, 2).status is Status.CERTIFIED
    assert proth_1878(ProthForm(K=1, p=2, n=4), 2).status is Status.INCONCLUSIVE
    assert proth_1878(ProthForm(K=1, p=2, n=3), 2).status is Status.INCONCLUSIVE
    with pytest.raises(ValueError):
        proth_1878(ProthForm(K=5, p=2, n=2), 2)  # K > 2^n
    with pytest.raises(ValueError):
        proth_1878(ProthForm(K=2, p=3, n=1), 2)  # p != 2


def test_pocklington_factor_form_pins():
    assert pocklington_factor_form(91, 3, 2, 3) is None
    claim = pocklington_factor_form(13, 3, 1, 2)
    assert isinstance(claim, FactorFormClaim)
    assert pocklington_factor_form(7, 3, 1, 3) is not None
    with pytest.raises(ValueError):
        pocklington_factor_form(91, 3, 3, 3)  # 27 does not divide 90


def test_pocklington_kpn_pins():
    assert pocklington_kpn(F_13, 2).status is Status.CERTIFIED
    assert pocklington_kpn(F_2_107_3, 2).status is Status.CERTIFIED
    assert pocklington_kpn(ProthForm(K=2, p=5, n=2), 2).status is Status.COMPOSITE_WITNESS
    # the size hypothesis is structural: K >= p^n never reaches the congruences
    with pytest.raises(ValueError):
        pocklington_kpn(ProthForm(K=4, p=3, n=1), 3)


def test_grau_phi_pins():
    assert grau_phi(F_13, 2).status is Status.CERTIFIED
    assert grau_phi(ProthForm(K=4, p=5, n=2), 2).status is Status.CERTIFIED
    residue = grau_phi(F_13, 3)
    assert residue.status is Status.INCONCLUSIVE
    assert "residue" in residue.reason
    with pytest.raises(ValueError):
        grau_phi(ProthForm(K=4, p=3, n=1), 2)


def test_grau_phi_large_p_inverse_path():
    # p = 107 > the direct-summation threshold, exercised by the worked value
    assert grau_phi(F_2_107_3, 2).status is Status.CERTIFIED


def test_grau_j_pins():
    assert grau_j(F_2_3_17, 2, 8).status in (Status.CERTIFIED, Status.INCONCLUSIVE)
    with pytest.raises(ValueError):
        grau_j(F_2_3_17, 2, 9)  # 3^16 > 2*3^17 fails
    # j = 0 evaluates the same congruence as the plain cyclotomic test
    for form, a in ((F_13, 2), (F_13, 3), (ProthForm(K=4, p=5, n=2), 2)):
        assert grau_j(form, a, 0).status == grau_phi(form, a).status


def test_one_shot_pins():
    out = one_shot(F_2_107_3, 2)
    assert out.status is Status.CERTIFIED
    assert out.certificate.witness_L == 1302367
    # composite: L = 4, 4^5 = 4 != 1 (mod 51), condition (ii) fails
    n51 = one_shot(ProthForm(K=2, p=5, n=2), 2)
    assert n51.status is Status.INCONCLUSIVE
    # prime but the base is a p-th power residue: L = 1
    assert one_shot(F_13, 3).status is Status.INCONCLUSIVE
    with pytest.raises(ValueError):
        one_shot(ProthForm(K=4, p=3, n=1), 2)  # p^n < K


def test_one_shot_j_matches_one_shot_at_zero():
    rng = random.Random(23)
    forms = [F_13, F_2_107_3, ProthForm(K=2, p=5, n=2), ProthForm(K=4, p=5, n=2)]
    for _ in range(40):
        K = rng.randrange(1, 30)
        p = int(rng.choice([3, 5, 7, 11]))
        n = rng.randrange(1, 6)
        if K % p == 0 or p**n < K:
            continue
        forms.append(ProthForm(K=K, p=p, n=n))
    for form in forms:
        for a in (2, 3, 5, rng.randrange(2, 10**4)):
            left = one_shot_j(form, a, 0)
            right = one_shot(form, a)
            assert left.status == right.status
            if left.certificate is not None:
                assert left.certificate.witness_L == right.certificate.witness_L


def test_one_shot_j_forced_base_stays_inconclusive():
    for j in range(1, 9):
        assert one_shot_j(F_2_3_17, 136837116, j).status is Status.INCONCLUSIVE
    with pytest.raises(ValueError):
        one_shot_j(F_2_3_17, 136837116, 9)


def test_cube_bound_pins():
    out = cube_bound_j(F_2_3_17, 136837116, 9)
    assert out.status is Status.CERTIFIED
    assert out.certificate.witness_L == 216758952
    assert cube_bound_j(F_2_3_17, 2, 11).status is not Status.COMPOSITE_WITNESS
    with pytest.raises(ValueError):
        cube_bound_j(F_2_3_17, 2, 12)
    # N = 3^6 + 1 = 730 sits on the excluded boundary N = p^(3(n-j)) + 1
    with pytest.raises(ValueError):
        cube_bound_j(ProthForm(K=1, p=3, n=6), 2, 4)


def test_seven_bound_pins():
    out = seven_bound_j(F_14_3_18, 1481700844, 12)
    assert out.status is Status.CERTIFIED
    assert out.certificate.witness_L == 3256260648
    with pytest.raises(ValueError):
        seven_bound_j(F_14_3_18, 2, 11)  # j < 2(n-j)


def test_fermat_only_pins():
    assert fermat_only_2kp(ProthForm(K=2, p=5, n=1), 2).status is Status.CERTIFIED
    with pytest.raises(ValueError):
        fermat_only_2kp(ProthForm(K=6, p=7, n=1), 2)  # 2^6 = 64 > 43

    assert fermat_only_2kp2(ProthForm(K=2, p=5, n=2), 2).status is Status.COMPOSITE_WITNESS
    assert fermat_only_2kp2(ProthForm(K=2, p=7, n=2), 2).status is Status.COMPOSITE_WITNESS
    assert fermat_only_2kp2(ProthForm(K=2, p=13, n=2), 2).status is Status.COMPOSITE_WITNESS

    with pytest.raises(ValueError):
        fermat_only_2kp3(ProthForm(K=8, p=67, n=3), 2)  # 2K' = 8 is a cube
    assert fermat_only_2kp3(ProthForm(K=2, p=23, n=3), 2).status is Status.COMPOSITE_WITNESS
    assert fermat_only_2kp3(ProthForm(K=2, p=29, n=3), 2).status is Status.CERTIFIED


def test_fermat_only_2kp2_first_certified_scan():
    # ascending p with K' = 1: N = 19 is the first prime the test can certify
    hits = []
    for p in map(int, sieve_range(3, 60)):
        form = ProthForm(K=2, p=p, n=2)
        out = fermat_only_2kp2(form, 2)
        if out.certified:
            hits.append(form.N)
    assert hits[0] == 19


def test_max_admissible_j_pins():
    assert max_admissible_j(F_2_3_17, TestId("OneShotJ")) == 8
    assert max_admissible_j(F_2_3_17, TestId("CubeBoundJ")) == 11
    assert max_admissible_j(F_14_3_18, TestId("OneShotJ")) == 7
    assert max_admissible_j(F_14_3_18, TestId("CubeBoundJ")) == 11
    assert max_admissible_j(F_14_3_18, TestId("SevenBoundJ")) == 12
    assert max_admissible_j(ProthForm(K=2, p=5, n=1), TestId("SevenBoundJ")) is None
    with pytest.raises(ValueError):
        max_admissible_j(F_13, TestId("OneShot"))


def test_certify_worked_values():
    out = certify(2450087)
    cert = out.certificate
    assert out.status is Status.CERTIFIED
    assert cert.test is TestId("OneShot")
    assert cert.base == 2
    assert cert.witness_L == 1302367

    forced = certify(258280327, base_list=[136837116], test=TestId("CubeBoundJ"), j=9)
    assert forced.status is Status.CERTIFIED
    assert forced.certificate.witness_L == 216758952

    seven = certify(5423886847, base_list=[1481700844], test=TestId("SevenBoundJ"), j=12)
    assert seven.status is Status.CERTIFIED
    assert seven.certificate.witness_L == 3256260648


def test_certify_composite_and_inconclusive_paths():
    assert certify(51).status is Status.COMPOSITE_WITNESS
    assert certify(9).status is Status.COMPOSITE_WITNESS
    # (K=4, p=3, n=1) defeats every test's size hypotheses
    assert certify(13, p=3).status is Status.INCONCLUSIVE
    assert certify(2 * 10007 * 10009 + 1).status is Status.INCONCLUSIVE
    with pytest.raises(ValueError):
        certify(2)


def test_certify_is_deterministic():
    for N in (2450087, 65537, 13, 97, 51):
        first = certify(N, seed=7)
        second = certify(N, seed=7)
        assert first.status == second.status
        if first.certificate is not None:
            assert first.certificate == second.certificate


def test_no_false_negatives_below_1e5():
    # every prime of usable form must certify with the default strategy
    missed = []
    checked = 0
    for N in map(int, sieve_range(3, 10**5)):
        if auto_decompose(N) is None:
            # largest prime-power factor of N-1 is below the cofactor
            continue
        checked += 1
        out = certify(N)
        if out.status is not Status.CERTIFIED:
            missed.append((N, out.reason))
    assert missed == []
    assert checked > 6000


def test_soundness_fuzz_sampled():
    rng = random.Random(41)
    certified = []
    trials = 0
    while trials < 1500:
        p = int(rng.choice([2, 3, 5, 7, 11, 13]))
        n = rng.randrange(1, 8)
        K = rng.randrange(1, 50)
        if K % p == 0:
            continue
        form = ProthForm(K=K, p=p, n=n)
        if form.N >= 10**7 or is_probable_prime(form.N):
            continue
        trials += 1
        j_tests = {TestId.GRAU_J, TestId.ONE_SHOT_J, TestId.CUBE_BOUND_J, TestId.SEVEN_BOUND_J}
        for test in TestId:
            if test is TestId.POCKLINGTON_FACTOR_FORM:
                continue
            for j in (range(form.n) if test in j_tests else [None]):
                for a in (2, rng.randrange(2, form.N)):
                    try:
                        out = run_test(form, test, a, j)
                    except ValueError:
                        continue
                    if out.certified:
                        certified.append((form, test, a, j))
    assert certified == []


def test_base_failure_density_small_primes():
    checked = 0
    for N in map(int, sieve_range(3, 10**4)):
        form = auto_decompose(N)
        if form is None:
            continue
        census = one_shot_base_census(N, form.K, form.p, form.n)
        for j in range(form.n):
            if form.p ** (form.n - j) < form.K * form.p**j:
                continue  # inadmissible for the one-shot family
            level = form.n - 1 - j
            expected = (N - 1) - form.K * form.p**level
            assert census[level] == expected, (N, form, j)
            checked += 1
    assert checked > 500


def test_grau_and_pocklington_agree_on_primes():
    disagreements = []
    for N in map(int, sieve_range(3, 10**5)):
        form = auto_decompose(N)
        if form is None or form.K >= form.p**form.n:
            continue
        for a in (2, 3, 5):
            if math.gcd(a, N) != 1:
                continue
            left = grau_phi(form, a)
            right = pocklington_kpn(form, a)
            if left.certified != right.certified:
                disagreements.append((N, a))
    assert disagreements == []


GOLDEN_JSON = (
    '{\n  "version": 1,\n  "N": "2450087",\n  "K": "2",\n  "p": "107",\n  "n": 3,\n'
    '  "test": "OneShot",\n  "a": "2",\n  "j": 0,\n  "L": "1302367",\n'
    '  "side_conditions": [\n    {\n      "name": "p^n >= K",\n      "holds": true\n'
    '    }\n  ]\n}'
)


def test_certificate_serialization_golden():
    cert = certify(2450087).certificate
    assert cert.to_json() == GOLDEN_JSON
    fields = list(json.loads(GOLDEN_JSON))
    assert fields == ["version", "N", "K", "p", "n", "test", "a", "j", "L", "side_conditions"]


def test_certificate_round_trip_and_verify():
    for N, kwargs in ((2450087, {}),
                      (258280327, dict(base_list=[136837116], test=TestId("CubeBoundJ"), j=9)),
                      (5423886847, dict(base_list=[1481700844], test=TestId("SevenBoundJ"), j=12)),
                      (13, {}), (65537, {})):
        cert = certify(N, **kwargs).certificate
        replay = Certificate.from_json(cert.to_json())
        assert replay == cert
        assert verify_certificate(replay).accepted
        assert verify_certificate(cert).accepted == verify_certificate(replay).accepted


def test_verify_rejects_tampering():
    cert = certify(2450087).certificate
    bumped = json.loads(cert.to_json())
    bumped["L"] = str(int(bumped["L"]) + 1)
    result = verify_certificate(Certificate.from_json(json.dumps(bumped)))
    assert not result.accepted
    assert "condition (ii)" in result.reason

    renamed = json.loads(cert.to_json())
    renamed["test"] = "SevenBoundJ"
    result = verify_certificate(Certificate.from_json(json.dumps(renamed)))
    assert not result.accepted
    assert "side condition" in result.reason


def test_verify_rejects_malformed_documents():
    cert = certify(2450087).certificate
    with pytest.raises(ValueError):
        Certificate.from_json(cert.to_json()[: len(cert.to_json()) // 2])
    with pytest.raises(ValueError):
        Certificate.from_json("{}")
    claimish = json.loads(cert.to_json())
    claimish["test"] = "PocklingtonFactorForm"
    result = verify_certificate(Certificate.from_json(json.dumps(claimish)))
    assert not result.accepted


def test_testid_values():
    assert {t.value for t in TestId} == {
        "Proth1878", "PocklingtonFactorForm", "PocklingtonKpn", "GrauPhi", "GrauJ",
        "OneShot", "OneShotJ", "CubeBoundJ", "SevenBoundJ",
        "FermatOnly2Kp", "FermatOnly2Kp2", "FermatOnly2Kp3",
    }
    assert TestId("SevenBoundJ") is TestId.SEVEN_BOUND_J
