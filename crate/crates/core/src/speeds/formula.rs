use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{Family, FamilyId};

/// A closed-form value for the labelled speed of a family class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaCount {
    pub value: u128,
    /// The value is only a lower bound on the speed.
    pub lower_bound: bool,
    /// The formula holds for `n >= valid_from`; below that it is reported
    /// but not expected to match.
    pub valid_from: usize,
}

impl FormulaCount {
    pub fn is_exact_at(&self, n: usize) -> bool {
        !self.lower_bound && n >= self.valid_from
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

fn pow2(e: usize) -> Option<u128> {
    1u128.checked_shl(u32::try_from(e).ok()?).filter(|_| e < 128)
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i))
}

/// Closed forms for the speeds of the small families. Complemented classes
/// share the count of the family itself.
pub fn formula_count(f: FamilyId, n: usize) -> Result<FormulaCount> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let overflow = || Error::Overflow("closed-form count");
    let exact = |value| FormulaCount { value, lower_bound: false, valid_from: 1 };
    let nn = n as u128;
    Ok(match f.family {
        Family::S => exact(pow2(n).ok_or_else(overflow)? - nn),
        Family::B => exact(pow2(n - 1).ok_or_else(overflow)?),
        Family::Q => {
            let lead = nn.checked_mul(pow2(n - 1).ok_or_else(overflow)?).ok_or_else(overflow)?;
            exact(lead - nn * (nn + 1) / 2 + 1)
        }
        Family::E1 => exact(binomial(nn, 2).ok_or_else(overflow)? + 1),
        Family::R => FormulaCount { value: nn + 1, lower_bound: false, valid_from: 3 },
        Family::M | Family::Mbc | Family::Z | Family::Mstar | Family::Zstar => FormulaCount {
            value: factorial(n / 2).ok_or_else(overflow)?,
            lower_bound: true,
            valid_from: 1,
        },
        Family::W | Family::D => return Err(Error::NoFormula(f.to_string())),
    })
}
