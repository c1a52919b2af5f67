//! Heuristic polynomial gcd over the integers by evaluation at a large
//! integer and `xi`-adic reconstruction.
//!
//! Every candidate is checked by exact division, so a `Some` answer is the
//! gcd; `None` means the heuristic gave up and the caller should fall back.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::Rational;
use crate::poly::{Mono, Poly};

type Uni = Vec<BigInt>;
type Bi = Vec<Uni>;

const ATTEMPTS: usize = 6;

fn trim(p: &mut Uni) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn max_abs(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval_uni(p: &[BigInt], xi: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * xi + c)
}

/// Symmetric `xi`-adic digits of `h`, least significant first.
fn digits(mut h: BigInt, xi: &BigInt) -> Uni {
    let half = xi / 2;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut r = h.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        h = (h - &r) / xi;
        out.push(r);
    }
    if out.is_empty() {
        out.push(BigInt::zero());
    }
    out
}

/// Exact division in `Z[t]`, or `None`.
fn div_uni(a: &[BigInt], b: &[BigInt]) -> Option<Uni> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let lb = b.last()?.clone();
    if lb.is_zero() {
        return None;
    }
    if r.len() < b.len() {
        return r.iter().all(Zero::is_zero).then(|| vec![BigInt::zero()]);
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let top = &r[i + b.len() - 1];
        let (c, rem) = top.div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

fn next_xi(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

fn start_xi(a: &BigInt, b: &BigInt) -> BigInt {
    a.min(b) * 2 + 29
}

/// Gcd in `Z[t]` including the integer content, with positive leading coefficient.
fn gcd_uni(a: &[BigInt], b: &[BigInt]) -> Option<Uni> {
    let (ca, cb) = (content(a), content(b));
    if ca.is_zero() {
        return Some(b.to_vec());
    }
    if cb.is_zero() {
        return Some(a.to_vec());
    }
    let c = ca.gcd(&cb);
    let a: Uni = a.iter().map(|v| v / &ca).collect();
    let b: Uni = b.iter().map(|v| v / &cb).collect();
    let mut xi = start_xi(&max_abs(&a), &max_abs(&b));
    for _ in 0..ATTEMPTS {
        let h = eval_uni(&a, &xi).gcd(&eval_uni(&b, &xi));
        let mut g = digits(h, &xi);
        trim(&mut g);
        let cg = content(&g);
        if !cg.is_zero() {
            g.iter_mut().for_each(|v| *v /= &cg);
            if g.last().is_some_and(Signed::is_negative) {
                g.iter_mut().for_each(|v| *v = -&*v);
            }
            if div_uni(&a, &g).is_some() && div_uni(&b, &g).is_some() {
                return Some(g.into_iter().map(|v| v * &c).collect());
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn eval_bi(p: &Bi, xi: &BigInt) -> Uni {
    let width = p.iter().map(Vec::len).max().unwrap_or(1);
    let mut out = vec![BigInt::zero(); width];
    for coeff in p.iter().rev() {
        for v in out.iter_mut() {
            *v *= xi;
        }
        for (v, c) in out.iter_mut().zip(coeff) {
            *v += c;
        }
    }
    trim(&mut out);
    out
}

fn max_abs_bi(p: &Bi) -> BigInt {
    p.iter().map(|c| max_abs(c)).max().unwrap_or_default()
}

/// `p` as dense integer coefficients `p[ex][ey]`, scaled to be primitive.
fn to_dense(p: &Poly<Rational>) -> Bi {
    let lcm = p.terms().iter().fold(BigInt::one(), |l, (_, c)| l.lcm(c.0.denom()));
    let dx = p.deg_x().unwrap_or(0) as usize;
    let dy = p.deg_y().unwrap_or(0) as usize;
    let mut out = vec![vec![BigInt::zero(); dy + 1]; dx + 1];
    for (m, c) in p.terms() {
        out[m.ex as usize][m.ey as usize] = c.0.numer() * (&lcm / c.0.denom());
    }
    let g = out.iter().fold(BigInt::zero(), |g, c| g.gcd(&content(c)));
    out.iter_mut().flatten().for_each(|v| *v /= &g);
    out
}

fn from_dense(p: &Bi) -> Poly<Rational> {
    Poly::from_terms(p.iter().enumerate().flat_map(|(ex, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(ey, c)| (Mono::new(ex as u32, ey as u32), Rational(BigRational::from_integer(c.clone()))))
    }))
}

/// Monic gcd of two nonzero polynomials over `Q`, or `None` if the heuristic fails.
pub(crate) fn heuristic_gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> Option<Poly<Rational>> {
    let (da, db) = (to_dense(a), to_dense(b));
    let mut xi = start_xi(&max_abs_bi(&da), &max_abs_bi(&db));
    for _ in 0..ATTEMPTS {
        let gamma = gcd_uni(&eval_bi(&da, &xi), &eval_bi(&db, &xi))?;
        let columns: Vec<Uni> = gamma.into_iter().map(|h| digits(h, &xi)).collect();
        let dx = columns.iter().map(Vec::len).max().unwrap_or(1);
        let g: Bi =
            (0..dx).map(|i| columns.iter().map(|col| col.get(i).cloned().unwrap_or_default()).collect()).collect();
        let g = from_dense(&g);
        if !g.is_zero() {
            let g = g.monic();
            if a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
                return Some(g);
            }
        }
        xi = next_xi(&xi);
    }
    None
}
