//! Two presentations of the rank-one quantum algebra, realized inside the
//! size-2 quantum matrix algebra.
//!
//! The first presentation has six generators: a raising / lowering / diagonal
//! triple together with a second-level companion of each.  The second is the
//! current-style presentation with one generator tower per triple member,
//! packaged into generating series.  Both come with explicit generator images
//! in the size-2 algebra; every defining relation, the Hopf structure, and
//! the translation between the two presentations are verified through those
//! images rather than assumed.

use std::sync::Arc;

use crate::biseries::BiSeries;
use crate::homs::{antipode_image, apply_anti, apply_anti_series};
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::series::Series;
use crate::yangian::{coproduct, counit, t_series, YCtx, YElement, YTensor};

/// Images of the six generators of the finite presentation.
pub struct FinitePresentation {
    pub ctx: Arc<YCtx>,
    pub e: YElement,
    pub f: YElement,
    pub h: YElement,
    pub je: YElement,
    pub jf: YElement,
    pub jh: YElement,
}

impl FinitePresentation {
    /// The standard generator images in the size-2 algebra: the level-one
    /// off-diagonal and diagonal-difference elements, and their level-two
    /// companions corrected by half the (shifted) level-one trace.
    pub fn standard() -> Self {
        let ctx = YCtx::standard(2);
        let g = |r: u32, i: i32, j: i32| YElement::gen(&ctx, r, i, j);
        let e = g(1, 1, 2);
        let f = g(1, 2, 1);
        let h = g(1, 1, 1).sub(&g(1, 2, 2));
        // half * (t1_11 + t1_22 - 1)
        let half_trace = g(1, 1, 1)
            .add(&g(1, 2, 2))
            .sub(&YElement::one())
            .scale(&Scalar::from_rational(crate::scalar::frac(1, 2)));
        let je = g(2, 1, 2).sub(&half_trace.mul(&e));
        let jf = g(2, 2, 1).sub(&half_trace.mul(&f));
        let jh = g(2, 1, 1).sub(&g(2, 2, 2)).sub(&half_trace.mul(&h));
        FinitePresentation { ctx, e, f, h, je, jf, jh }
    }

    /// All defining relations of the finite presentation: the Lie triple
    /// relations, covariance of the companion generators, and the one cubic
    /// relation tying the companions together.
    pub fn verify_relations(&self) -> Result<(), String> {
        let check = |name: &str, got: YElement, want: YElement| -> Result<(), String> {
            if got == want {
                Ok(())
            } else {
                Err(format!("finite presentation relation `{}` fails", name))
            }
        };
        let two = |x: &YElement| x.scale(&Scalar::from_int(2));
        check("[e,f]=h", self.e.commutator(&self.f), self.h.clone())?;
        check("[h,e]=2e", self.h.commutator(&self.e), two(&self.e))?;
        check("[h,f]=-2f", self.h.commutator(&self.f), two(&self.f).neg())?;

        // Covariance [x, J(y)] = J([x, y]) over all nine pairs.
        let zero = YElement::zero();
        let pairs: [(&str, &YElement, &YElement, YElement); 9] = [
            ("[e,J(e)]=0", &self.e, &self.je, zero.clone()),
            ("[e,J(f)]=J(h)", &self.e, &self.jf, self.jh.clone()),
            ("[e,J(h)]=-2J(e)", &self.e, &self.jh, two(&self.je).neg()),
            ("[f,J(e)]=-J(h)", &self.f, &self.je, self.jh.neg()),
            ("[f,J(f)]=0", &self.f, &self.jf, zero.clone()),
            ("[f,J(h)]=2J(f)", &self.f, &self.jh, two(&self.jf)),
            ("[h,J(e)]=2J(e)", &self.h, &self.je, two(&self.je)),
            ("[h,J(f)]=-2J(f)", &self.h, &self.jf, two(&self.jf).neg()),
            ("[h,J(h)]=0", &self.h, &self.jh, zero),
        ];
        for (name, x, jy, want) in pairs {
            check(name, x.commutator(jy), want)?;
        }

        // [[J(e), J(f)], J(h)] = (J(e) f - e J(f)) h.
        let lhs = self.je.commutator(&self.jf).commutator(&self.jh);
        let rhs = self.je.mul(&self.f).sub(&self.e.mul(&self.jf)).mul(&self.h);
        check("cubic", lhs, rhs)
    }

    /// Compatibility of the coproduct with the presentation coproduct
    /// `x -> x (x) 1 + 1 (x) x` and
    /// `J(x) -> J(x) (x) 1 + 1 (x) J(x) + [x (x) 1, t]/2` with
    /// `t = e (x) f + f (x) e + (h (x) h)/2`.
    pub fn verify_coproduct(&self) -> Result<(), String> {
        let one = YElement::one();
        let primitive = |x: &YElement| -> YTensor {
            YTensor::of(x, &one).add(&YTensor::of(&one, x))
        };
        let t = YTensor::of(&self.e, &self.f)
            .add(&YTensor::of(&self.f, &self.e))
            .add(&YTensor::of(&self.h, &self.h).scale(&Scalar::from_rational(crate::scalar::frac(1, 2))));
        for (name, x) in [("e", &self.e), ("f", &self.f), ("h", &self.h)] {
            if coproduct(x) != primitive(x) {
                return Err(format!("generator `{}` is not primitive under the coproduct", name));
            }
        }
        for (name, x, jx) in [
            ("J(e)", &self.e, &self.je),
            ("J(f)", &self.f, &self.jf),
            ("J(h)", &self.h, &self.jh),
        ] {
            let correction = YTensor::of(x, &one)
                .commutator(&t)
                .scale(&Scalar::from_rational(crate::scalar::frac(1, 2)));
            let want = primitive(jx).add(&correction);
            if coproduct(jx) != want {
                return Err(format!("coproduct of `{}` deviates from the presentation formula", name));
            }
        }
        Ok(())
    }

    /// Compatibility with the presentation antipode `x -> -x`,
    /// `J(x) -> -J(x) + x`.
    pub fn verify_antipode(&self) -> Result<(), String> {
        let s = antipode_image(&self.ctx, 3);
        for (name, x) in [("e", &self.e), ("f", &self.f), ("h", &self.h)] {
            if apply_anti(x, &s) != x.neg() {
                return Err(format!("antipode does not negate `{}`", name));
            }
        }
        for (name, x, jx) in [
            ("J(e)", &self.e, &self.je),
            ("J(f)", &self.f, &self.jf),
            ("J(h)", &self.h, &self.jh),
        ] {
            if apply_anti(jx, &s) != jx.neg().add(x) {
                return Err(format!("antipode of `{}` deviates from the presentation formula", name));
            }
        }
        Ok(())
    }

    /// The counit kills all six generators.
    pub fn verify_counit(&self) -> Result<(), String> {
        for (name, x) in [
            ("e", &self.e),
            ("f", &self.f),
            ("h", &self.h),
            ("J(e)", &self.je),
            ("J(f)", &self.jf),
            ("J(h)", &self.jh),
        ] {
            if !counit(x).is_zero() {
                return Err(format!("counit does not kill `{}`", name));
            }
        }
        Ok(())
    }
}

/// Images of the current-presentation generating series, exact down to
/// `u^{-depth}`.
pub struct SeriesPresentation {
    pub ctx: Arc<YCtx>,
    pub depth: i64,
    pub e_ser: Series<YElement>,
    pub f_ser: Series<YElement>,
    pub h_ser: Series<YElement>,
}

impl SeriesPresentation {
    /// The standard series images: with `T(u)` the generator matrix,
    /// the raising series is `t22^{-1} t12`, the lowering series is
    /// `t21 t22^{-1}`, and the diagonal series is
    /// `t11 t22^{-1} - t21 t22^{-1} t12 t22^{-1}`.
    pub fn standard(depth: i64) -> Self {
        let ctx = YCtx::standard(2);
        let t = t_series(&ctx, depth);
        let floor = Some(-depth);
        let t22inv = t.get(2, 2).invert_to(floor);
        let e_ser = t22inv.mul(t.get(1, 2));
        let f_ser = t.get(2, 1).mul(&t22inv);
        let h_ser = t
            .get(1, 1)
            .mul(&t22inv)
            .sub(&t.get(2, 1).mul(&t22inv).mul(t.get(1, 2)).mul(&t22inv));
        SeriesPresentation { ctx, depth, e_ser, f_ser, h_ser }
    }

    /// The `k`-th raising component (coefficient of `u^{-k-1}`).
    pub fn e_comp(&self, k: i64) -> YElement {
        self.e_ser.coeff(-k - 1)
    }

    pub fn f_comp(&self, k: i64) -> YElement {
        self.f_ser.coeff(-k - 1)
    }

    pub fn h_comp(&self, k: i64) -> YElement {
        self.h_ser.coeff(-k - 1)
    }

    /// The series-form defining relations, cleared of denominators: with
    /// `{a,b} = ab + ba`,
    ///
    /// ```text
    /// [h(u), h(v)] = 0
    /// (u-v) [e(u), f(v)] = -(h(u) - h(v))
    /// (u-v) [e(u), e(v)] = -(e(u) - e(v))^2
    /// (u-v) [f(u), f(v)] = +(f(u) - f(v))^2
    /// (u-v) [h(u), e(v)] = -{h(u), e(u) - e(v)}
    /// (u-v) [h(u), f(v)] = +{h(u), f(u) - f(v)}
    /// ```
    pub fn verify_series_relations(&self) -> Result<(), String> {
        let f_req = -(self.depth - 1);
        let eu = BiSeries::from_u(&self.e_ser);
        let ev = BiSeries::from_v(&self.e_ser);
        let fu = BiSeries::from_u(&self.f_ser);
        let fv = BiSeries::from_v(&self.f_ser);
        let hu = BiSeries::from_u(&self.h_ser);
        let hv = BiSeries::from_v(&self.h_ser);
        let umv = BiSeries::u_minus_v();
        let anti = |a: &BiSeries<YElement>, b: &BiSeries<YElement>| a.mul(b).add(&b.mul(a));

        hu.commutator(&hv)
            .check_zero_to(f_req, f_req)
            .map_err(|e| format!("diagonal series do not commute: {}", e))?;

        let de = eu.sub(&ev);
        let df = fu.sub(&fv);

        umv.mul(&eu.commutator(&fv))
            .add(&hu.sub(&hv))
            .check_zero_to(f_req, f_req)
            .map_err(|e| format!("raising/lowering cross relation fails: {}", e))?;
        umv.mul(&eu.commutator(&ev))
            .add(&de.mul(&de))
            .check_zero_to(f_req, f_req)
            .map_err(|e| format!("raising series relation fails: {}", e))?;
        umv.mul(&fu.commutator(&fv))
            .sub(&df.mul(&df))
            .check_zero_to(f_req, f_req)
            .map_err(|e| format!("lowering series relation fails: {}", e))?;
        umv.mul(&hu.commutator(&ev))
            .add(&anti(&hu, &de))
            .check_zero_to(f_req, f_req)
            .map_err(|e| format!("diagonal/raising relation fails: {}", e))?;
        umv.mul(&hu.commutator(&fv))
            .sub(&anti(&hu, &df))
            .check_zero_to(f_req, f_req)
            .map_err(|e| format!("diagonal/lowering relation fails: {}", e))?;
        Ok(())
    }

    /// The componentwise defining relations on all exactly known components:
    ///
    /// ```text
    /// [h_k, h_l] = 0                      [e_k, f_l] = h_{k+l}
    /// [h_0, e_k] = 2 e_k                  [h_0, f_k] = -2 f_k
    /// [e_{k+1}, e_l] - [e_k, e_{l+1}] = {e_k, e_l}
    /// [f_{k+1}, f_l] - [f_k, f_{l+1}] = -{f_k, f_l}
    /// [h_{k+1}, e_l] - [h_k, e_{l+1}] = {h_k, e_l}
    /// [h_{k+1}, f_l] - [h_k, f_{l+1}] = -{h_k, f_l}
    /// ```
    pub fn verify_component_relations(&self) -> Result<(), String> {
        let kmax = self.depth - 1;
        let anti = |a: &YElement, b: &YElement| a.mul(b).add(&b.mul(a));
        let fail = |name: &str, k: i64, l: i64| -> Result<(), String> {
            Err(format!("component relation `{}` fails at k={} l={}", name, k, l))
        };
        for k in 0..=kmax {
            for l in 0..=kmax {
                if !self.h_comp(k).commutator(&self.h_comp(l)).is_zero() {
                    return fail("[h_k,h_l]=0", k, l);
                }
                if k + l <= kmax
                    && self.e_comp(k).commutator(&self.f_comp(l)) != self.h_comp(k + l)
                {
                    return fail("[e_k,f_l]=h_{k+l}", k, l);
                }
                if k + 1 <= kmax && l + 1 <= kmax {
                    let pairs: [(&str, YElement, YElement); 3] = [
                        (
                            "raising tower",
                            self.e_comp(k + 1)
                                .commutator(&self.e_comp(l))
                                .sub(&self.e_comp(k).commutator(&self.e_comp(l + 1))),
                            anti(&self.e_comp(k), &self.e_comp(l)),
                        ),
                        (
                            "lowering tower",
                            self.f_comp(k + 1)
                                .commutator(&self.f_comp(l))
                                .sub(&self.f_comp(k).commutator(&self.f_comp(l + 1))),
                            anti(&self.f_comp(k), &self.f_comp(l)).neg(),
                        ),
                        (
                            "diagonal tower",
                            self.h_comp(k + 1)
                                .commutator(&self.e_comp(l))
                                .sub(&self.h_comp(k).commutator(&self.e_comp(l + 1))),
                            anti(&self.h_comp(k), &self.e_comp(l)),
                        ),
                    ];
                    for (name, got, want) in pairs {
                        if got != want {
                            return fail(name, k, l);
                        }
                    }
                    let got = self
                        .h_comp(k + 1)
                        .commutator(&self.f_comp(l))
                        .sub(&self.h_comp(k).commutator(&self.f_comp(l + 1)));
                    if got != anti(&self.h_comp(k), &self.f_comp(l)).neg() {
                        return fail("diagonal/lowering tower", k, l);
                    }
                }
            }
        }
        for k in 0..=kmax {
            let e_k = self.e_comp(k);
            let f_k = self.f_comp(k);
            let h0 = self.h_comp(0);
            if h0.commutator(&e_k) != e_k.scale(&Scalar::from_int(2)) {
                return fail("[h_0,e_k]=2e_k", k, 0);
            }
            if h0.commutator(&f_k) != f_k.scale(&Scalar::from_int(-2)) {
                return fail("[h_0,f_k]=-2f_k", k, 0);
            }
        }
        Ok(())
    }

    /// Lifts a series to the tensor square, placing each coefficient in the
    /// chosen leg.
    fn lift(s: &Series<YElement>, left: bool) -> Series<YTensor> {
        let one = YElement::one();
        Series::from_terms(
            s.iter().map(|(e, c)| {
                (*e, if left { YTensor::of(c, &one) } else { YTensor::of(&one, c) })
            }),
            s.floor(),
        )
    }

    /// Pushes the coproduct through a series coefficientwise.
    fn coproduct_series(s: &Series<YElement>) -> Series<YTensor> {
        Series::from_terms(s.iter().map(|(e, c)| (*e, coproduct(c))), s.floor())
    }

    /// The closed coproduct formulas of the current presentation:
    ///
    /// ```text
    /// e(u) -> e(u) (x) 1 + sum_k (-1)^k f(u+1)^k h(u) (x) e(u)^{k+1}
    /// f(u) -> 1 (x) f(u) + sum_k (-1)^k f(u)^{k+1}   (x) h(u) e(u+1)^k
    /// h(u) -> sum_k (-1)^k (k+1) f(u+1)^k h(u) (x) h(u) e(u+1)^k
    /// ```
    pub fn verify_coproduct(&self) -> Result<(), String> {
        let floor = Some(-self.depth);
        let f_req = -self.depth;
        let one_step = Scalar::from_int(1);
        let e_up = self.e_ser.shift_arg(&one_step, floor);
        let f_up = self.f_ser.shift_arg(&one_step, floor);

        let el = Self::lift(&self.e_ser, true);
        let er = Self::lift(&self.e_ser, false);
        let fl = Self::lift(&self.f_ser, true);
        let fr = Self::lift(&self.f_ser, false);
        let hl = Self::lift(&self.h_ser, true);
        let hr = Self::lift(&self.h_ser, false);
        let fl_up = Self::lift(&f_up, true);
        let er_up = Self::lift(&e_up, false);

        let kmax = self.depth as u32;

        // Raising series.
        let mut rhs = el.clone();
        for k in 0..=kmax {
            let mut term: Series<YTensor> = Series::from_terms([(0i64, YTensor::one())], floor);
            for _ in 0..k {
                term = term.mul(&fl_up);
            }
            term = term.mul(&hl);
            for _ in 0..=k {
                term = term.mul(&er);
            }
            if k % 2 == 1 {
                term = term.neg();
            }
            rhs = rhs.add(&term);
        }
        Self::coproduct_series(&self.e_ser)
            .eq_to(&rhs, f_req)
            .map_err(|e| format!("raising coproduct formula fails: {}", e))?;

        // Lowering series.
        let mut rhs = fr.clone();
        for k in 0..=kmax {
            let mut term: Series<YTensor> = Series::from_terms([(0i64, YTensor::one())], floor);
            for _ in 0..=k {
                term = term.mul(&fl);
            }
            term = term.mul(&hr);
            for _ in 0..k {
                term = term.mul(&er_up);
            }
            if k % 2 == 1 {
                term = term.neg();
            }
            rhs = rhs.add(&term);
        }
        Self::coproduct_series(&self.f_ser)
            .eq_to(&rhs, f_req)
            .map_err(|e| format!("lowering coproduct formula fails: {}", e))?;

        // Diagonal series.
        let mut rhs: Series<YTensor> = Series::exact_zero();
        for k in 0..=kmax {
            let mut term: Series<YTensor> = Series::from_terms([(0i64, YTensor::one())], floor);
            for _ in 0..k {
                term = term.mul(&fl_up);
            }
            term = term.mul(&hl).mul(&hr);
            for _ in 0..k {
                term = term.mul(&er_up);
            }
            term = term.scale(&Scalar::from_int(
                (k as i64 + 1) * if k % 2 == 1 { -1 } else { 1 },
            ));
            rhs = rhs.add(&term);
        }
        Self::coproduct_series(&self.h_ser)
            .eq_to(&rhs, f_req)
            .map_err(|e| format!("diagonal coproduct formula fails: {}", e))?;
        Ok(())
    }

    /// The closed antipode formulas of the current presentation, with
    /// `w(u) = h(u) + f(u+1) e(u)` and `w'(u) = h(u) + f(u) e(u+1)`:
    ///
    /// ```text
    /// e(u) -> -w(u)^{-1} e(u)
    /// f(u) -> -f(u) w'(u)^{-1}
    /// h(u) -> w(u)^{-1} (1 - f(u+1) w(u)^{-1} e(u))
    /// ```
    pub fn verify_antipode(&self) -> Result<(), String> {
        let floor = Some(-self.depth);
        let f_req = -self.depth;
        let s = antipode_image(&self.ctx, self.depth);
        let one_step = Scalar::from_int(1);
        let e_up = self.e_ser.shift_arg(&one_step, floor);
        let f_up = self.f_ser.shift_arg(&one_step, floor);
        let w = self.h_ser.add(&f_up.mul(&self.e_ser));
        let winv = w.invert_to(floor);
        let wped = self.h_ser.add(&self.f_ser.mul(&e_up));
        let one_ser: Series<YElement> = Series::from_terms([(0i64, YElement::one())], floor);

        apply_anti_series(&self.e_ser, &s)
            .eq_to(&winv.mul(&self.e_ser).neg(), f_req)
            .map_err(|e| format!("raising antipode formula fails: {}", e))?;
        apply_anti_series(&self.f_ser, &s)
            .eq_to(&self.f_ser.mul(&wped.invert_to(floor)).neg(), f_req)
            .map_err(|e| format!("lowering antipode formula fails: {}", e))?;
        let rhs = winv.mul(&one_ser.sub(&f_up.mul(&winv).mul(&self.e_ser)));
        apply_anti_series(&self.h_ser, &s)
            .eq_to(&rhs, f_req)
            .map_err(|e| format!("diagonal antipode formula fails: {}", e))?;
        Ok(())
    }

    /// The counit kills every raising/lowering component and sends the
    /// diagonal series to 1.
    pub fn verify_counit(&self) -> Result<(), String> {
        for k in 0..self.depth {
            if !counit(&self.e_comp(k)).is_zero()
                || !counit(&self.f_comp(k)).is_zero()
                || !counit(&self.h_comp(k)).is_zero()
            {
                return Err(format!("counit does not kill a component at k={}", k));
            }
        }
        Ok(())
    }
}

/// The translation between the two presentations: the plain triple maps to
/// the zeroth components, and the companions map to first components with
/// symmetrized zeroth-component corrections:
///
/// ```text
/// J(e) -> e_1 - (e_0 h_0 + h_0 e_0)/4
/// J(f) -> f_1 - (f_0 h_0 + h_0 f_0)/4
/// J(h) -> h_1 + (e_0 f_0 + f_0 e_0 - h_0^2)/2
/// ```
///
/// Both sides are realized in the size-2 algebra and compared exactly.
pub fn presentation_translation_check(depth: i64) -> Result<(), String> {
    assert!(depth >= 2);
    let fin = FinitePresentation::standard();
    let cur = SeriesPresentation::standard(depth);
    let quarter = Scalar::from_rational(crate::scalar::frac(1, 4));
    let half = Scalar::from_rational(crate::scalar::frac(1, 2));
    let e0 = cur.e_comp(0);
    let f0 = cur.f_comp(0);
    let h0 = cur.h_comp(0);
    let anti = |a: &YElement, b: &YElement| a.mul(b).add(&b.mul(a));

    let checks: [(&str, &YElement, YElement); 6] = [
        ("e -> e_0", &fin.e, e0.clone()),
        ("f -> f_0", &fin.f, f0.clone()),
        ("h -> h_0", &fin.h, h0.clone()),
        (
            "J(e) -> e_1 - (e_0 h_0 + h_0 e_0)/4",
            &fin.je,
            cur.e_comp(1).sub(&anti(&e0, &h0).scale(&quarter)),
        ),
        (
            "J(f) -> f_1 - (f_0 h_0 + h_0 f_0)/4",
            &fin.jf,
            cur.f_comp(1).sub(&anti(&f0, &h0).scale(&quarter)),
        ),
        (
            "J(h) -> h_1 + (e_0 f_0 + f_0 e_0 - h_0^2)/2",
            &fin.jh,
            cur.h_comp(1)
                .add(&anti(&e0, &f0).sub(&h0.mul(&h0)).scale(&half)),
        ),
    ];
    for (name, lhs, rhs) in checks {
        if *lhs != rhs {
            return Err(format!("presentation translation `{}` fails", name));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_presentation_relations_hold() {
        FinitePresentation::standard().verify_relations().unwrap();
    }

    #[test]
    fn finite_presentation_hopf_structure() {
        let p = FinitePresentation::standard();
        p.verify_coproduct().unwrap();
        p.verify_antipode().unwrap();
        p.verify_counit().unwrap();
    }

    #[test]
    fn current_presentation_series_relations_hold() {
        SeriesPresentation::standard(3).verify_series_relations().unwrap();
    }

    #[test]
    fn current_presentation_component_relations_hold() {
        SeriesPresentation::standard(3).verify_component_relations().unwrap();
    }

    #[test]
    fn current_presentation_components_start_as_expected() {
        // e_0, f_0, h_0 are the level-one off-diagonal and diagonal
        // difference; the diagonal series starts with 1.
        let cur = SeriesPresentation::standard(3);
        let g = |r: u32, i: i32, j: i32| YElement::gen(&cur.ctx, r, i, j);
        assert_eq!(cur.e_comp(0), g(1, 1, 2));
        assert_eq!(cur.f_comp(0), g(1, 2, 1));
        assert_eq!(cur.h_comp(0), g(1, 1, 1).sub(&g(1, 2, 2)));
        assert_eq!(cur.h_ser.coeff(0), YElement::one());
    }

    #[test]
    fn current_presentation_hopf_structure() {
        let cur = SeriesPresentation::standard(3);
        cur.verify_coproduct().unwrap();
        cur.verify_antipode().unwrap();
        cur.verify_counit().unwrap();
    }

    #[test]
    fn translation_between_presentations() {
        presentation_translation_check(2).unwrap();
    }
}
