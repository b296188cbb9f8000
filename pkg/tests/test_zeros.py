import pytest

import _refs as refs
from zetalab.errors import DomainError
from zetalab.zeros import ZeroBracket, first_zeros, refine, scan_brackets
from zetalab.zeta import eta, zeta_em


class TestScan:
    def test_ten_zeros_below_fifty(self):
        # fine-step recount confirms ten ordinates below 50
        assert len(scan_brackets(1, 50, 0.1)) == 10

    def test_none_below_ten(self):
        assert scan_brackets(1, 10, 0.1) == []

    def test_step_refinement_stable(self):
        counts = {len(scan_brackets(1, 50, step)) for step in (0.25, 0.1, 0.05)}
        assert counts == {10}

    def test_brackets_ordered_and_signed(self):
        brs = scan_brackets(1, 30, 0.1)
        assert all(b.t_lo < b.t_hi for b in brs)
        assert all(b.z_lo * b.z_hi < 0 for b in brs)
        assert all(a.t_hi <= b.t_lo for a, b in zip(brs, brs[1:]))

    def test_preconditions(self):
        with pytest.raises(DomainError):
            scan_brackets(0.5, 10, 0.1)
        with pytest.raises(DomainError):
            scan_brackets(5, 4, 0.1)
        with pytest.raises(DomainError):
            scan_brackets(1, 10, 0.3)


class TestBracket:
    def test_invariants_enforced(self):
        with pytest.raises(DomainError):
            ZeroBracket(2.0, 1.0, -1.0, 1.0)
        with pytest.raises(DomainError):
            ZeroBracket(1.0, 2.0, 1.0, 1.0)


class TestRefine:
    def test_first_three_ordinates(self, zeros3):
        for rec, ref in zip(zeros3, refs.ZERO_ORDINATES):
            assert abs(rec.t - ref) < 1e-8
            assert rec.bracket.t_lo <= rec.t <= rec.bracket.t_hi

    def test_residuals(self, zeros3):
        for rec in zeros3:
            assert rec.residual < 1e-6
            assert abs(eta(complex(0.5, rec.t), 1e-12).value) < 1e-6

    def test_zeta_small_on_both_evaluations(self, zeros3):
        for rec in zeros3:
            rho = complex(0.5, rec.t)
            assert abs(zeta_em(rho, 1e-12).value) < 1e-5
            assert abs(zeta_em(1 - rho, 1e-12).value) < 1e-5  # reflection zero

    def test_tolerance_floor(self, zeros3):
        with pytest.raises(DomainError):
            refine(zeros3[0].bracket, 1e-12)


class TestFirstZeros:
    def test_ascending_no_duplicates(self):
        recs = first_zeros(5, 1e-9)
        ts = [r.t for r in recs]
        assert ts == sorted(ts)
        assert all(b - a > 1e-6 for a, b in zip(ts, ts[1:]))

    def test_matches_reference_list(self):
        recs = first_zeros(8, 1e-9)
        for rec, ref in zip(recs, refs.ZERO_ORDINATES):
            assert abs(rec.t - ref) < 1e-7

    def test_twentieth_zero(self):
        recs = first_zeros(20, 1e-9)
        assert abs(recs[-1].t - refs.ZERO_ORDINATES[19]) < 1e-6
        assert max(r.residual for r in recs) < 1e-6

    def test_domain(self):
        with pytest.raises(DomainError):
            first_zeros(0)
        with pytest.raises(DomainError):
            first_zeros(21)
