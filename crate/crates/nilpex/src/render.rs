//! Shared textual rendering for linear combinations of symbols
//! (elements `2*e1 - e3`, bilinear forms `d13 + d22 + d31`, …).

use crate::arith::Scalar;
use num_traits::One;

/// Formats `Σ coefᵢ · symᵢ`, skipping zero terms; empty sums print as `0`.
pub(crate) fn linear_combination<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Scalar, String)>,
{
    let mut out = String::new();
    for (coef, sym) in terms {
        if coef.is_zero() {
            continue;
        }
        let (negative, body) = render_term(&coef, &sym);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn render_term(coef: &Scalar, sym: &str) -> (bool, String) {
    if coef.as_rational().is_some_and(|r| r.is_one()) {
        return (false, sym.to_string());
    }
    if coef.as_rational().is_some_and(|r| (-r).is_one()) {
        return (true, sym.to_string());
    }
    let rendered = coef.to_string();
    // A multi-term polynomial numerator with trivial denominator prints
    // bare; wrap it so the product stays unambiguous.
    let needs_parens = coef.numer().term_count() > 1 && coef.denom().is_one();
    if needs_parens {
        return (false, format!("({rendered})*{sym}"));
    }
    if let Some(stripped) = rendered.strip_prefix('-') {
        (true, format!("{stripped}*{sym}"))
    } else {
        (false, format!("{rendered}*{sym}"))
    }
}
