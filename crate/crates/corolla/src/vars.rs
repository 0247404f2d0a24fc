//! Tagged indexed variables.
//!
//! Five families: the series variable `t`, the leaf/height variables
//! `x0, x1, ...`, the internal-height variables `q0, q1, ...`, the second
//! color `y0, y1, ...` used by the bicolored operators, and the marker `u`
//! used for exponential conjugation. The total order
//! `t < x0 < x1 < ... < q0 < q1 < ... < y0 < ... < u`
//! fixes the canonical term order everywhere.

use std::fmt;

use crate::error::Error;

/// Variable family tag. Declaration order is the canonical family order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    T,
    X,
    Q,
    Y,
    U,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::T => 't',
            Family::X => 'x',
            Family::Q => 'q',
            Family::Y => 'y',
            Family::U => 'u',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c {
            't' => Some(Family::T),
            'x' => Some(Family::X),
            'q' => Some(Family::Q),
            'y' => Some(Family::Y),
            'u' => Some(Family::U),
            _ => None,
        }
    }

    /// `t` and `u` are single variables; their index is always 0.
    pub fn indexed(self) -> bool {
        !matches!(self, Family::T | Family::U)
    }
}

/// A single variable: family tag plus index (`t` and `u` ignore the index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    family: Family,
    index: u32,
}

impl VarId {
    pub fn new(family: Family, index: u32) -> VarId {
        let index = if family.indexed() { index } else { 0 };
        VarId { family, index }
    }

    pub fn x(i: u32) -> VarId {
        VarId::new(Family::X, i)
    }

    pub fn q(i: u32) -> VarId {
        VarId::new(Family::Q, i)
    }

    pub fn y(i: u32) -> VarId {
        VarId::new(Family::Y, i)
    }

    pub fn t() -> VarId {
        VarId::new(Family::T, 0)
    }

    pub fn u() -> VarId {
        VarId::new(Family::U, 0)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index(self) -> u32 {
        self.index
    }

    /// Parse `x3`, `q0`, `t`, `u`, and the bare `x`/`q`/`y` (index 0).
    pub fn parse(s: &str) -> Result<VarId, Error> {
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty variable".into()))?;
        let family = Family::from_letter(letter)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{s}`")))?;
        let rest = chars.as_str();
        if rest.is_empty() {
            return Ok(VarId::new(family, 0));
        }
        if !family.indexed() {
            return Err(Error::Parse(format!("variable `{letter}` takes no index")));
        }
        let index: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable index in `{s}`")))?;
        Ok(VarId::new(family, index))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.indexed() {
            write!(f, "{}{}", self.family.letter(), self.index)
        } else {
            write!(f, "{}", self.family.letter())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order_t_x_q_y_u() {
        let mut vs = [
            VarId::u(),
            VarId::q(0),
            VarId::x(1),
            VarId::t(),
            VarId::y(0),
            VarId::x(0),
            VarId::q(2),
        ];
        vs.sort();
        let shown: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        assert_eq!(shown, ["t", "x0", "x1", "q0", "q2", "y0", "u"]);
    }

    #[test]
    fn t_and_u_ignore_index() {
        assert_eq!(VarId::new(Family::T, 5), VarId::t());
        assert_eq!(VarId::new(Family::U, 3), VarId::u());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(VarId::parse("x12").unwrap(), VarId::x(12));
        assert_eq!(VarId::parse("q").unwrap(), VarId::q(0));
        assert_eq!(VarId::parse("t").unwrap(), VarId::t());
        assert!(VarId::parse("t2").is_err());
        assert!(VarId::parse("z1").is_err());
        assert_eq!(VarId::x(3).to_string(), "x3");
        assert_eq!(VarId::u().to_string(), "u");
    }
}
