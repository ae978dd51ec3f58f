use std::fmt;

use crate::scalars::Scalar;

/// Writes `Σ c_i·m_i` in the expression grammar. An empty monomial string
/// denotes the unit; an empty term list prints `0`.
pub(crate) fn write_sum(f: &mut fmt::Formatter<'_>, terms: &[(Scalar, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (c, m)) in terms.iter().enumerate() {
        let neg = c.has_negative_lead();
        let mag = if neg { -c } else { c.clone() };
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if m.is_empty() {
            if mag.needs_parens() && neg {
                write!(f, "({mag})")?;
            } else {
                write!(f, "{mag}")?;
            }
        } else if mag.is_one() {
            write!(f, "{m}")?;
        } else if mag.needs_parens() {
            write!(f, "({mag})*{m}")?;
        } else {
            write!(f, "{mag}*{m}")?;
        }
    }
    Ok(())
}
