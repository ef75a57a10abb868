//! Symmetric-function targets used by the Harish-Chandra comparisons:
//! elementary, complete and power sums in a list of variables, plus the
//! "factorial" variants where the j-th factor carries a shift depending on
//! the chosen index and its position.


use crate::scalar::Scalar;

/// e_k: sum over strictly increasing index tuples of products of variables.
pub fn elementary(vars: &[Scalar], k: usize) -> Scalar {
    factorial_elementary(vars, k, |_, _| Scalar::zero())
}

/// h_k: sum over weakly increasing index tuples.
pub fn complete(vars: &[Scalar], k: usize) -> Scalar {
    factorial_complete(vars, k, |_, _| Scalar::zero())
}

/// p_k: sum of k-th powers (k >= 1).
pub fn power_sum(vars: &[Scalar], k: usize) -> Scalar {
    assert!(k >= 1);
    let mut out = Scalar::zero();
    for v in vars {
        out = out.add(&v.pow(k as u32));
    }
    out
}

/// Sum over strictly increasing tuples i_1 < ... < i_k (1-based positions)
/// of prod_j (x_{i_j} - shift(i_j, j)).
pub fn factorial_elementary(
    vars: &[Scalar],
    k: usize,
    shift: impl Fn(usize, usize) -> Scalar,
) -> Scalar {
    tuples_sum(vars, k, false, &shift)
}

/// Sum over weakly increasing tuples i_1 <= ... <= i_k of
/// prod_j (x_{i_j} - shift(i_j, j)).
pub fn factorial_complete(
    vars: &[Scalar],
    k: usize,
    shift: impl Fn(usize, usize) -> Scalar,
) -> Scalar {
    tuples_sum(vars, k, true, &shift)
}

fn tuples_sum(
    vars: &[Scalar],
    k: usize,
    weak: bool,
    shift: &impl Fn(usize, usize) -> Scalar,
) -> Scalar {
    fn rec(
        vars: &[Scalar],
        k: usize,
        weak: bool,
        shift: &impl Fn(usize, usize) -> Scalar,
        pos: usize,
        start: usize,
        acc: &Scalar,
        out: &mut Scalar,
    ) {
        if pos > k {
            *out = out.add(acc);
            return;
        }
        for i in start..=vars.len() {
            let factor = vars[i - 1].sub(&shift(i, pos));
            let acc2 = acc.mul(&factor);
            let next = if weak { i } else { i + 1 };
            rec(vars, k, weak, shift, pos + 1, next, &acc2, out);
        }
    }
    let mut out = Scalar::zero();
    rec(vars, k, weak, shift, 1, 1, &Scalar::one(), &mut out);
    out
}
