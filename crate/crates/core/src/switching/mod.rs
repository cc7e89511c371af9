//! Switching of line subcodes in GF(p)-linear MDS codes.
//!
//! For a code over GF(p^k) whose generator has entries in GF(p), every
//! codeword `a` and nonzero direction `v` determine the subcode
//! `C ∩ (L(a_1,v) x ... x L(a_d,v))` of order p. Replacing such a subcode by
//! a translate along one coordinate keeps the code MDS; disjoint subcodes
//! switch independently.

pub mod example;

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::mds::{linear_construction, Code, LinearConstruction, LinearForm, Subcode};

/// A subcode `C ∩ (L(a_1,v) x ... x L(a_d,v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSubcode {
    anchor: Vec<u32>,
    direction: u32,
    subcode: Subcode,
}

impl LineSubcode {
    pub fn anchor(&self) -> &[u32] {
        &self.anchor
    }

    pub fn direction(&self) -> u32 {
        self.direction
    }

    pub fn subcode(&self) -> &Subcode {
        &self.subcode
    }

    pub fn words(&self) -> &[Vec<u32>] {
        self.subcode.words()
    }
}

fn prime_form(code: &Code) -> Result<&LinearForm> {
    match code.linear_form() {
        Some(form) if !form.generator.is_empty() && form.over_prime_subfield() => Ok(form),
        _ => Err(Error::InvalidParameters(
            "line subcodes need a code that is linear over the prime subfield".into(),
        )),
    }
}

/// The line subcode through `anchor` with direction `v`.
pub fn line_subcode(code: &Code, anchor: &[u32], v: u32) -> Result<LineSubcode> {
    let form = prime_form(code)?;
    let field = &form.field;
    if !code.contains(anchor) {
        return Err(Error::InvalidParameters(format!(
            "anchor {anchor:?} is not a codeword"
        )));
    }
    let lines = anchor
        .iter()
        .map(|&a| field.line(a, v))
        .collect::<Result<Vec<_>>>()?;
    // anchor + v * (beta G) for beta in GF(p)^m
    let p = field.characteristic();
    let m = form.generator.len();
    let mut words = Vec::with_capacity((p as usize).pow(m as u32));
    let mut beta = vec![0u32; m];
    for idx in 0..(p as u64).pow(m as u32) {
        let mut x = idx;
        for b in beta.iter_mut().rev() {
            *b = (x % p as u64) as u32;
            x /= p as u64;
        }
        let offset = form.encode(&beta);
        let w: Vec<u32> = anchor
            .iter()
            .zip(&offset)
            .map(|(&a, &o)| field.add(a, field.mul(o, v)))
            .collect();
        debug_assert!(code.contains(&w));
        words.push(w);
    }
    let alphabets = lines.iter().map(|l| l.points().to_vec()).collect();
    Ok(LineSubcode {
        anchor: anchor.to_vec(),
        direction: v,
        subcode: Subcode::from_parts(alphabets, words),
    })
}

fn field_of(code: &Code) -> Result<&Field> {
    code.linear_form()
        .map(|f| f.field.as_ref())
        .ok_or_else(|| Error::InvalidParameters("switching needs the code's field".into()))
}

/// Replaces the component `C_1` by `C_1 + alpha v e_coord`.
pub fn switch_translate(
    code: &Code,
    field: &Field,
    component: &LineSubcode,
    coord: usize,
    alpha: u32,
) -> Result<Code> {
    if alpha >= field.characteristic() {
        return Err(Error::InvalidParameters(format!("{alpha} is not in GF(p)")));
    }
    if coord >= code.len() {
        return Err(Error::InvalidParameters(format!(
            "coordinate {coord} out of range"
        )));
    }
    let shift = field.scale(alpha, component.direction);
    let moved: Vec<Vec<u32>> = component
        .words()
        .iter()
        .map(|w| {
            let mut w = w.clone();
            w[coord] = field.add(w[coord], shift);
            w
        })
        .collect();
    if alpha == 0 {
        if component.words().iter().any(|w| !code.contains(w)) {
            return Err(Error::InvalidParameters(
                "component is not a subcode of the code".into(),
            ));
        }
        return Ok(code.clone());
    }
    code.exchange(component.words(), &moved)
}

/// Type-(I) switching: `C_1 -> C_1 + (alpha v, 0, ..., 0)`. The result is
/// in general not linear and carries no linear form.
pub fn switch_type1(code: &Code, component: &LineSubcode, alpha: u32) -> Result<Code> {
    let field = field_of(code)?.clone();
    switch_translate(code, &field, component, 0, alpha)
}

/// Replaces the component by its image under
/// `x_coord -> a_coord + beta (x_coord - a_coord)`, a symbol permutation of
/// `L(a_coord, v)`; `beta` must be a nonzero element of GF(p).
pub fn switch_scale(
    code: &Code,
    field: &Field,
    component: &LineSubcode,
    coord: usize,
    beta: u32,
) -> Result<Code> {
    if beta == 0 || beta >= field.characteristic() {
        return Err(Error::InvalidParameters(format!(
            "{beta} is not in GF(p)^*"
        )));
    }
    if coord >= code.len() {
        return Err(Error::InvalidParameters(format!(
            "coordinate {coord} out of range"
        )));
    }
    let a = component.anchor[coord];
    let moved: Vec<Vec<u32>> = component
        .words()
        .iter()
        .map(|w| {
            let mut w = w.clone();
            w[coord] = field.add(a, field.mul(beta, field.sub(w[coord], a)));
            w
        })
        .collect();
    code.exchange(component.words(), &moved)
}

/// `floor((1 - eps) p^{k(1+m)-1} / p^{2m+k})` with `eps = num/den`.
pub fn guaranteed_components(p: u32, k: u32, m: u32, eps: Ratio) -> Result<u128> {
    let exp = k as i64 * (1 + m as i64) - 1 - (2 * m as i64 + k as i64);
    let keep = (eps.den - eps.num) as u128;
    let den = eps.den as u128;
    let pw = |e: u32| (p as u128).checked_pow(e);
    let overflow = || Error::InvalidParameters("bound quantities overflow 128 bits".into());
    if exp >= 0 {
        let num = keep
            .checked_mul(pw(exp as u32).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
        Ok(num / den)
    } else {
        match pw((-exp) as u32).and_then(|x| x.checked_mul(den)) {
            Some(d) => Ok(keep / d),
            None => Ok(0),
        }
    }
}

/// Disjoint line subcodes chosen greedily.
#[derive(Debug, Clone)]
pub struct Selection {
    pub components: Vec<LineSubcode>,
    /// How many the counting argument guarantees at this size.
    pub guaranteed: u128,
}

/// Greedy selection over a seeded permutation of (anchor, direction)
/// pairs, one direction per projective class.
pub fn select_disjoint(code: &Code, budget: usize, eps: Ratio, seed: u64) -> Result<Selection> {
    let form = prime_form(code)?;
    let field = form.field.clone();
    let (p, k) = (field.characteristic(), field.degree());
    let guaranteed = guaranteed_components(p, k, code.rank() as u32, eps)?;
    let directions = field.canonical_directions();
    let mut candidates: Vec<(usize, u32)> = (0..code.size())
        .flat_map(|i| directions.iter().map(move |&v| (i, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    candidates.shuffle(&mut rng);

    let mut used: HashSet<Vec<u32>> = HashSet::new();
    let mut components = Vec::new();
    for (i, v) in candidates {
        if components.len() == budget {
            break;
        }
        let anchor = code.word(i);
        if used.contains(anchor) {
            continue;
        }
        let sub = line_subcode(code, anchor, v)?;
        if sub.words().iter().any(|w| used.contains(w)) {
            continue;
        }
        used.extend(sub.words().iter().cloned());
        components.push(sub);
    }
    if components.len() < budget {
        return Err(Error::BudgetUnreachable {
            requested: budget,
            achieved: components.len(),
        });
    }
    Ok(Selection {
        components,
        guaranteed,
    })
}

/// Codes obtained by type-(I) switching with a nonzero assignment of
/// scalars to pairwise-disjoint components.
pub struct SwitchedCodes<'a> {
    code: &'a Code,
    field: Field,
    components: &'a [LineSubcode],
    assignments: std::vec::IntoIter<u64>,
}

impl<'a> Iterator for SwitchedCodes<'a> {
    type Item = Result<(Vec<u32>, Code)>;

    fn next(&mut self) -> Option<Self::Item> {
        let idx = self.assignments.next()?;
        let p = self.field.characteristic() as u64;
        let mut alphas = vec![0u32; self.components.len()];
        let mut x = idx;
        for a in alphas.iter_mut() {
            *a = (x % p) as u32;
            x /= p;
        }
        let mut out = self.code.clone();
        for (comp, &alpha) in self.components.iter().zip(&alphas) {
            if alpha != 0 {
                match switch_translate(&out, &self.field, comp, 0, alpha) {
                    Ok(c) => out = c,
                    Err(e) => return Some(Err(e)),
                }
            }
        }
        Some(Ok((alphas, out)))
    }
}

/// Emits `count` switched codes for distinct nonzero scalar assignments in a
/// seeded order.
pub fn enumerate_switched<'a>(
    code: &'a Code,
    components: &'a [LineSubcode],
    count: usize,
    seed: u64,
) -> Result<SwitchedCodes<'a>> {
    let field = prime_form(code)?.field.as_ref().clone();
    for (i, a) in components.iter().enumerate() {
        for b in &components[i + 1..] {
            if !a.subcode().is_disjoint(b.subcode()) {
                return Err(Error::InvalidParameters("components intersect".into()));
            }
        }
    }
    let p = field.characteristic() as u64;
    let total = p
        .checked_pow(components.len() as u32)
        .map(|n| n - 1)
        .unwrap_or(u64::MAX);
    if count as u64 > total {
        return Err(Error::InvalidParameters(format!(
            "only {total} nonzero assignments exist for {} components",
            components.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let assignments: Vec<u64> = if total <= 1 << 20 {
        let mut all: Vec<u64> = (1..=total).collect();
        all.shuffle(&mut rng);
        all.truncate(count);
        all
    } else {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let x = rng.gen_range(1..=total);
            if seen.insert(x) {
                out.push(x);
            }
        }
        out
    };
    Ok(SwitchedCodes {
        code,
        field,
        components,
        assignments: assignments.into_iter(),
    })
}

/// An exact fraction `num/den` in `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Ratio> {
        if num == 0 || num >= den {
            return Err(Error::InvalidParameters(format!(
                "epsilon {num}/{den} is not in (0, 1)"
            )));
        }
        Ok(Ratio { num, den })
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Nearest fraction with denominator `2^20`, for decimal inputs.
    pub fn from_f64(x: f64) -> Result<Ratio> {
        let den = 1u64 << 20;
        let num = (x * den as f64).round() as u64;
        let g = gcd(num, den);
        Ratio::new(num / g.max(1), den / g.max(1))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Quantities of the switching lower bound on the number of MDS codes.
#[derive(Debug, Clone, PartialEq)]
pub struct Bound {
    pub m: u32,
    /// Number of disjoint components switched.
    pub t: u128,
    /// Exponent of p in `t` before the `(1-eps)` factor and flooring.
    pub t_exponent: i64,
    /// Alternatives per step, `eps p^{k(1+m)-1-m}`.
    pub w: f64,
    pub ln_w: f64,
    pub w_exponent: u64,
    /// `ln(p^t w^t / t!)`.
    pub ln_bound: f64,
    /// `t < 1`: the bound says nothing.
    pub vacuous: bool,
}

/// Evaluates `t`, `w` and `ln(p^t w^t / t!)`.
pub fn lower_bound(p: u32, k: u32, d: usize, rho: usize, eps: Ratio) -> Result<Bound> {
    let field = Field::new(p, k)?;
    if linear_construction(&field, d, rho)? == LinearConstruction::FieldEvaluation {
        return Err(Error::InvalidParameters(format!(
            "no GF({p})-linear code of length {d} and distance {rho} is available"
        )));
    }
    let m = (d - rho + 1) as u32;
    let t = guaranteed_components(p, k, m, eps)?;
    let t_exponent = k as i64 * (1 + m as i64) - 1 - (2 * m as i64 + k as i64);
    let w_exponent = (k as u64 * (1 + m as u64)) - 1 - m as u64;
    let ln_p = (p as f64).ln();
    let ln_w = eps.value().ln() + w_exponent as f64 * ln_p;
    let tf = t as f64;
    let ln_bound = if t == 0 {
        0.0
    } else {
        tf * ln_p + tf * ln_w - ln_gamma(tf + 1.0)
    };
    Ok(Bound {
        m,
        t,
        t_exponent,
        w: eps.value() * (p as f64).powi(w_exponent as i32),
        ln_w,
        w_exponent,
        ln_bound,
        vacuous: t < 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mds::{linear_mds, verify_mds};
    use std::sync::Arc;

    fn gf9_square_code() -> Code {
        linear_mds(&Arc::new(Field::new(3, 2).unwrap()), 3, 2).unwrap()
    }

    #[test]
    fn parity_line_subcode() {
        let code = gf9_square_code();
        let sub = line_subcode(&code, &[0, 0, 0], 1).unwrap();
        assert_eq!(sub.words().len(), 9);
        assert!(sub.words().iter().flatten().all(|&x| x < 3));
        assert_eq!(sub.subcode().verify(&code), Ok(()));
        // agrees with the brute-force intersection
        let brute = Subcode::of(&code, sub.subcode().alphabets().to_vec()).unwrap();
        assert_eq!(brute.words(), sub.words());
    }

    #[test]
    fn subcodes_through_a_word() {
        let code = gf9_square_code();
        let w = code.word(17).to_vec();
        let distinct: HashSet<Vec<Vec<u32>>> = (1..9)
            .map(|v| line_subcode(&code, &w, v).unwrap().words().to_vec())
            .collect();
        assert_eq!(distinct.len(), 4);
        // total count p^{km} (p^k-1)/(p-1) / p^m
        let mut all = HashSet::new();
        for w in code.words() {
            for v in Field::new(3, 2).unwrap().canonical_directions() {
                all.insert(line_subcode(&code, w, v).unwrap().words().to_vec());
            }
        }
        assert_eq!(all.len(), 81 * 4 / 9);
    }

    #[test]
    fn line_subcode_errors() {
        let code = gf9_square_code();
        assert!(line_subcode(&code, &[0, 0, 1], 1).is_err());
        assert!(matches!(
            line_subcode(&code, &[0, 0, 0], 0),
            Err(Error::ZeroDirection)
        ));
        let rs = linear_mds(&Arc::new(Field::new(2, 4).unwrap()), 8, 7).unwrap();
        assert!(line_subcode(&rs, rs.word(0), 1).is_err());
    }

    #[test]
    fn type1_switching() {
        let code = gf9_square_code();
        let anchor = code.word(10).to_vec();
        let comp = line_subcode(&code, &anchor, 4).unwrap();
        assert_eq!(switch_type1(&code, &comp, 0).unwrap(), code);
        let switched = switch_type1(&code, &comp, 1).unwrap();
        assert_eq!(verify_mds(&switched), Ok(()));
        let old: HashSet<&[u32]> = code.words().collect();
        let new: HashSet<&[u32]> = switched.words().collect();
        assert_eq!(old.difference(&new).count(), 9);
        assert!(prime_form(&switched).is_err());
        // alpha then -alpha
        let moved = line_subcode_after(&comp, 1, 4);
        let back = switch_translate(&switched, &Field::new(3, 2).unwrap(), &moved, 0, 2).unwrap();
        assert_eq!(back, code);
    }

    fn line_subcode_after(comp: &LineSubcode, alpha: u32, v: u32) -> LineSubcode {
        let f = Field::new(3, 2).unwrap();
        let shift = f.scale(alpha, v);
        let words: Vec<Vec<u32>> = comp
            .words()
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w[0] = f.add(w[0], shift);
                w
            })
            .collect();
        let mut anchor = comp.anchor().to_vec();
        anchor[0] = f.add(anchor[0], shift);
        LineSubcode {
            anchor,
            direction: v,
            subcode: Subcode::from_parts(comp.subcode().alphabets().to_vec(), words),
        }
    }

    #[test]
    fn greedy_selection_is_disjoint_and_seeded() {
        let code = gf9_square_code();
        let eps = Ratio::new(1, 2).unwrap();
        let sel = select_disjoint(&code, 3, eps, 7).unwrap();
        assert_eq!(sel.guaranteed, 0);
        for (i, a) in sel.components.iter().enumerate() {
            for b in &sel.components[i + 1..] {
                assert!(a.subcode().is_disjoint(b.subcode()));
            }
        }
        let again = select_disjoint(&code, 3, eps, 7).unwrap();
        assert_eq!(sel.components, again.components);
        match select_disjoint(&code, 10, eps, 7) {
            Err(Error::BudgetUnreachable {
                requested: 10,
                achieved,
            }) => assert!(achieved <= 9),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bound_arithmetic() {
        let b = lower_bound(2, 4, 3, 2, Ratio::new(1, 4).unwrap()).unwrap();
        assert_eq!(b.t, 6);
        assert_eq!(b.w, 128.0);
        assert!(!b.vacuous);
        let b = lower_bound(2, 3, 3, 2, Ratio::new(3, 4).unwrap()).unwrap();
        assert_eq!(b.t, 0);
        assert!(b.vacuous);
        let b = lower_bound(2, 8, 3, 2, Ratio::new(1, 8).unwrap()).unwrap();
        assert_eq!(b.t, 1792);
        assert_eq!(b.w, 262144.0);
        let ln2 = 2f64.ln();
        let ln_fact: f64 = (1..=1792).map(|i| (i as f64).ln()).sum();
        let expected = 1792.0 * ln2 + 1792.0 * 18.0 * ln2 - ln_fact;
        assert!((b.ln_bound - expected).abs() < 1e-6 * expected.abs());
        assert!(lower_bound(2, 4, 8, 7, Ratio::new(1, 4).unwrap()).is_err());
        assert!(Ratio::new(0, 3).is_err());
        assert!(Ratio::new(3, 3).is_err());
    }
}
