//! A budgeted Buchberger engine producing reduced Gröbner bases.
//!
//! The engine is deliberately conservative: it either returns a reduced
//! basis that certifies itself (every S-polynomial and every input reduces
//! to zero) or fails loudly with a budget error — never a silently wrong
//! answer.

use crate::arith::{poly_divmod, Monomial, MonomialOrder, Polynomial};
use crate::{Error, Result};

/// Resource caps for [`buchberger_with_budget`].
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Maximum number of S-polynomial reductions.
    pub max_pair_reductions: usize,
    /// Maximum total degree any reduced S-polynomial may reach.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_pair_reductions: 100_000,
            max_degree: 20,
        }
    }
}

/// A reduced Gröbner basis: generators are monic, no generator's leading
/// monomial divides another's, and every generator is fully reduced
/// modulo the others.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    /// Generators sorted by ascending leading monomial.
    pub generators: Vec<Polynomial>,
    /// The monomial order the basis is reduced against.
    pub order: MonomialOrder,
}

impl GroebnerBasis {
    /// Fully reduces `f` modulo the basis (the unique normal form).
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        let (_, r) = poly_divmod(f, &self.generators, self.order)?;
        Ok(r)
    }

    /// True when the basis generates the unit ideal (`1` is a generator).
    #[must_use]
    pub fn is_trivial(&self) -> bool {
        self.generators.iter().any(Polynomial::is_one)
    }

    /// Self-certification: every S-polynomial of a generator pair reduces
    /// to zero, and so does every polynomial of `inputs`. This is the
    /// Buchberger criterion, so success proves the generators are a
    /// Gröbner basis containing the input ideal.
    pub fn certify(&self, inputs: &[Polynomial]) -> Result<()> {
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                let s = s_polynomial(&self.generators[i], &self.generators[j], self.order);
                let r = self.reduce(&s)?;
                if !r.is_zero() {
                    return Err(Error::VerificationFailed(format!(
                        "S-polynomial of generators {i} and {j} reduces to `{r}`, not 0"
                    )));
                }
            }
        }
        for (k, f) in inputs.iter().enumerate() {
            let r = self.reduce(f)?;
            if !r.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "input {k} reduces to `{r}`, not 0 — the ideal is not contained"
                )));
            }
        }
        Ok(())
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `inputs`
/// under the default [`Budget`].
pub fn buchberger(inputs: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(inputs, order, Budget::default())
}

/// [`buchberger`] with explicit resource caps. Exceeding a cap yields
/// [`Error::BudgetExhausted`].
///
/// Pairs are pruned with the Gebauer–Möller criteria and selected by the
/// normal strategy (smallest lcm first), which together with canonical
/// final reduction makes the output deterministic; the reduced basis is in
/// fact unique for the ideal and order, independent of input arrangement.
pub fn buchberger_with_budget(
    inputs: &[Polynomial],
    order: MonomialOrder,
    budget: Budget,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for f in inputs {
        if !f.is_zero() {
            update(&mut basis, &mut pairs, f.monic(order), order);
        }
    }

    let mut reductions = 0usize;
    while !pairs.is_empty() {
        // Normal selection: smallest lcm of the leading monomials.
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp(&pair_lcm(&basis, **a, order), &pair_lcm(&basis, **b, order))
                    .then_with(|| a.cmp(b))
            })
            .map(|(idx, _)| idx)
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);

        reductions += 1;
        if reductions > budget.max_pair_reductions {
            return Err(Error::BudgetExhausted(format!(
                "Buchberger exceeded {} pair reductions; raise the pair budget to continue",
                budget.max_pair_reductions
            )));
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let (_, h) = poly_divmod(&s, &basis, order)?;
        if h.is_zero() {
            continue;
        }
        if h.degree() > budget.max_degree {
            return Err(Error::BudgetExhausted(format!(
                "Buchberger reached degree {} (cap {}); raise the degree budget to continue",
                h.degree(),
                budget.max_degree
            )));
        }
        update(&mut basis, &mut pairs, h.monic(order), order);
    }

    Ok(GroebnerBasis {
        generators: reduce_basis(basis, order)?,
        order,
    })
}

fn lt(f: &Polynomial, order: MonomialOrder) -> &Monomial {
    f.leading(order).expect("basis members are nonzero").0
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize), order: MonomialOrder) -> Monomial {
    lt(&basis[i], order).lcm(lt(&basis[j], order))
}

/// The S-polynomial `lcm/lt(f)·f − lcm/lt(g)·g` with monic inputs.
fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (mf, cf) = f.leading(order).expect("nonzero");
    let (mg, cg) = g.leading(order).expect("nonzero");
    let l = mf.lcm(mg);
    let uf = l.try_div(mf).expect("lcm divisible");
    let ug = l.try_div(mg).expect("lcm divisible");
    let a = f.mul_term(&uf, &cf.recip());
    let b = g.mul_term(&ug, &cg.recip());
    &a - &b
}

/// Gebauer–Möller update: adds `h` to the basis and installs the new
/// pairs `(g, h)` that survive the chain and coprimality criteria, while
/// discarding old pairs made redundant by `h`.
fn update(
    basis: &mut Vec<Polynomial>,
    pairs: &mut Vec<(usize, usize)>,
    h: Polynomial,
    order: MonomialOrder,
) {
    let t = basis.len();
    let lt_h = lt(&h, order).clone();
    let lcm_with = |g: &Polynomial| lt(g, order).lcm(&lt_h);

    // Candidate new pairs (g_i, h), examined smallest lcm first. Within an
    // equal-lcm class a coprime-leading candidate goes first, so it is the
    // survivor and the product criterion then discards the whole class.
    let mut cand: Vec<usize> = (0..t).collect();
    cand.sort_by(|&a, &b| {
        order
            .cmp(&lcm_with(&basis[a]), &lcm_with(&basis[b]))
            .then_with(|| {
                let cop = |i: usize| !lt(&basis[i], order).coprime(&lt_h);
                cop(a).cmp(&cop(b)).then_with(|| a.cmp(&b))
            })
    });
    let mut kept: Vec<usize> = Vec::new();
    for &i in &cand {
        let l_i = lcm_with(&basis[i]);
        // Chain criterion: drop (i,h) when a surviving candidate's lcm
        // divides l_i (divisors sort first under any admissible order).
        if !kept.iter().any(|&k| lcm_with(&basis[k]).divides(&l_i)) {
            kept.push(i);
        }
    }
    // Product criterion: coprime leading terms reduce to zero.
    kept.retain(|&i| !lt(&basis[i], order).coprime(&lt_h));

    // Old pairs whose lcm is a proper multiple of both new lcms are
    // redundant once h arrives.
    pairs.retain(|&(i, j)| {
        let l_ij = lt(&basis[i], order).lcm(lt(&basis[j], order));
        !lt_h.divides(&l_ij) || lcm_with(&basis[i]) == l_ij || lcm_with(&basis[j]) == l_ij
    });

    basis.push(h);
    pairs.extend(kept.into_iter().map(|i| (i, t)));
}

/// Minimalizes and autoreduces the basis, yielding the canonical reduced
/// Gröbner basis sorted by ascending leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>, order: MonomialOrder) -> Result<Vec<Polynomial>> {
    basis.sort_by(|a, b| order.cmp(lt(a, order), lt(b, order)));
    // Minimal basis: drop any member whose leading monomial is divisible
    // by another surviving member's.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in basis {
        if !minimal.iter().any(|g| lt(g, order).divides(lt(&f, order))) {
            minimal.push(f);
        }
    }
    // Autoreduce: replace each member by its normal form modulo the rest.
    let mut reduced: Vec<Polynomial> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (_, r) = poly_divmod(&minimal[i], &others, order)?;
        // Leading monomials are pairwise indivisible, so r keeps its lt.
        reduced.push(r.monic(order));
    }
    reduced.sort_by(|a, b| order.cmp(lt(a, order), lt(b, order)));
    Ok(reduced)
}
