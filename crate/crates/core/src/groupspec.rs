//! Text syntax for groups.
//!
//! ```text
//! spec   := atom ( "x" atom )*
//! atom   := "Z" int | "C" int | "D" int | "Q" int | "A5"
//!         | "perm:" cycles ( ";" cycles )*
//! cycles := ( "(" int+ ")" )+
//! ```
//!
//! Whitespace is ignored except as a separator between cycle points.
//! Products are left-associative. `D` and `Q` take the group order.

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{
    direct_product_with_limit, from_permutations_with_limit, make_a5, make_cyclic_with_limit,
    make_dihedral, make_generalized_quaternion, Descriptor, FiniteGroup, Permutation,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub source: String,
    pub descriptor: Descriptor,
}

impl GroupSpec {
    pub fn canonical(&self) -> String {
        self.descriptor.to_string()
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        build_descriptor(&self.descriptor, max_order)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let mut descriptor = p.atom()?;
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some('x') | Some('X') => {
                p.pos += 1;
                let rhs = p.atom()?;
                descriptor = Descriptor::Product(Box::new(descriptor), Box::new(rhs));
            }
            Some(c) => return Err(p.error(format!("expected 'x' or end of input, found '{c}'"))),
        }
    }
    Ok(GroupSpec {
        source: text.to_string(),
        descriptor,
    })
}

/// Order of the group a descriptor names, without building it. `None` for
/// permutation groups, whose order is only known after closure.
pub fn descriptor_order(d: &Descriptor) -> Option<usize> {
    match d {
        Descriptor::Cyclic(n) | Descriptor::Dihedral(n) | Descriptor::GeneralizedQuaternion(n) => Some(*n),
        Descriptor::Alternating5 => Some(60),
        Descriptor::Permutation(_) => None,
        Descriptor::Product(a, b) => descriptor_order(a)?.checked_mul(descriptor_order(b)?),
    }
}

pub fn build_descriptor(d: &Descriptor, max_order: usize) -> Result<FiniteGroup> {
    if let Some(n) = descriptor_order(d) {
        if n > max_order {
            return Err(Error::capacity(format!("group {d} of order {n}"), max_order));
        }
    }
    match d {
        Descriptor::Cyclic(n) => make_cyclic_with_limit(*n, max_order),
        Descriptor::Dihedral(m) => make_dihedral(*m),
        Descriptor::GeneralizedQuaternion(m) => make_generalized_quaternion(*m),
        Descriptor::Alternating5 => make_a5(),
        Descriptor::Permutation(gens) => {
            let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1).max(1);
            from_permutations_with_limit(gens, degree, max_order)
        }
        Descriptor::Product(a, b) => {
            let ga = build_descriptor(a, max_order)?;
            let gb = build_descriptor(b, max_order)?;
            direct_product_with_limit(&ga, &gb, max_order)
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| Error::Syntax {
            position: start,
            message: format!("integer {digits} is too large"),
        })
    }

    fn atom(&mut self) -> Result<Descriptor> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Err(self.error("expected a group, found end of input"));
        };
        self.pos += 1;
        match c.to_ascii_uppercase() {
            'Z' | 'C' => {
                let n = self.int()?;
                if n == 0 {
                    return Err(Error::invalid("cyclic group order must be at least 1"));
                }
                Ok(Descriptor::Cyclic(n))
            }
            'D' => {
                let m = self.int()?;
                if m < 6 || m % 2 != 0 {
                    return Err(Error::invalid(format!(
                        "D{m}: dihedral groups are written by their order, which must be even and at least 6"
                    )));
                }
                Ok(Descriptor::Dihedral(m))
            }
            'Q' => {
                let m = self.int()?;
                if m < 8 || m % 4 != 0 {
                    return Err(Error::invalid(format!(
                        "Q{m}: generalized quaternion order must be a multiple of 4 and at least 8"
                    )));
                }
                Ok(Descriptor::GeneralizedQuaternion(m))
            }
            'A' => {
                let n = self.int()?;
                if n != 5 {
                    return Err(Error::invalid(format!(
                        "A{n}: only the alternating group A5 is supported"
                    )));
                }
                Ok(Descriptor::Alternating5)
            }
            'P' => {
                self.pos = start;
                self.keyword("perm:")?;
                self.permutations()
            }
            _ => {
                self.pos = start;
                Err(self.error(format!("unknown group '{c}', expected Z, C, D, Q, A5 or perm:")))
            }
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        for expected in word.chars() {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.eq_ignore_ascii_case(&expected) => self.pos += 1,
                _ => return Err(self.error(format!("expected '{word}'"))),
            }
        }
        Ok(())
    }

    fn permutations(&mut self) -> Result<Descriptor> {
        let mut gens = vec![self.cycles()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(';') {
                self.pos += 1;
                gens.push(self.cycles()?);
            } else {
                break;
            }
        }
        Ok(Descriptor::Permutation(gens))
    }

    fn cycles(&mut self) -> Result<Permutation> {
        let start = self.pos;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() != Some('(') {
                break;
            }
            self.pos += 1;
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(',') if !cycle.is_empty() => self.pos += 1,
                    _ => cycle.push(self.int()?),
                }
            }
            if cycle.is_empty() {
                return Err(self.error("empty cycle"));
            }
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            self.pos = start;
            self.skip_ws();
            return Err(self.error("expected '(' starting a cycle"));
        }
        if let Some(0) = cycles.iter().flatten().copied().min() {
            return Err(Error::invalid("permutation points are 1-based"));
        }
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Permutation::from_cycles(&cycles, degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_MAX_ORDER;
    use proptest::prelude::*;

    fn order_of(s: &str) -> usize {
        parse_group_spec(s).unwrap().build(DEFAULT_MAX_ORDER).unwrap().order()
    }

    #[test]
    fn atoms() {
        assert_eq!(parse_group_spec("Z6").unwrap().descriptor, Descriptor::Cyclic(6));
        assert_eq!(parse_group_spec(" c 6 ").unwrap().descriptor, Descriptor::Cyclic(6));
        assert_eq!(parse_group_spec("D12").unwrap().canonical(), "D12");
        assert_eq!(parse_group_spec("Q 8").unwrap().canonical(), "Q8");
        assert_eq!(parse_group_spec("A5").unwrap().canonical(), "A5");
    }

    #[test]
    fn products_and_permutations() {
        let s = parse_group_spec("Z2 x Z2 x Z2").unwrap();
        assert_eq!(s.canonical(), "Z2xZ2xZ2");
        assert_eq!(order_of("Z2xZ2xZ2"), 8);
        let a5 = parse_group_spec("perm:(1 2 3 4 5);(1 2 3)").unwrap();
        assert_eq!(a5.canonical(), "perm:(1 2 3 4 5);(1 2 3)");
        assert_eq!(a5.build(DEFAULT_MAX_ORDER).unwrap().order(), 60);
        assert_eq!(order_of("perm:(1 2)(3 4);(1 3)(2 4)"), 4);
        assert_eq!(order_of("perm:(2 3 1)xZ2"), 6);
        assert_eq!(parse_group_spec("perm:(3 1 2)").unwrap().canonical(), "perm:(1 2 3)");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_group_spec("D5"), Err(Error::InvalidParameter(m)) if m.contains("even")));
        assert!(matches!(parse_group_spec("Q10"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("Z0"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("A6"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec("Z6x"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_group_spec("K4"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_group_spec("Z6 Z2"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_group_spec("perm:()"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("perm:(1 2)(2 3)"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group_spec(""), Err(Error::Syntax { position: 0, .. })));
    }

    #[test]
    fn build_respects_limit() {
        let s = parse_group_spec("Z100xZ100xZ2").unwrap();
        assert!(s.build(DEFAULT_MAX_ORDER).unwrap_err().is_capacity());
    }

    fn atom_text() -> impl Strategy<Value = String> {
        prop_oneof![
            (1usize..40).prop_map(|n| format!("Z{n}")),
            (1usize..40).prop_map(|n| format!("c {n}")),
            (3usize..20).prop_map(|k| format!("D{}", 2 * k)),
            (2usize..10).prop_map(|k| format!("q{}", 4 * k)),
            Just("A5".to_string()),
            proptest::collection::vec(proptest::sample::subsequence((1usize..=6).collect::<Vec<_>>(), 1..=6), 1..3)
                .prop_map(|gens| {
                    let parts: Vec<String> = gens
                        .iter()
                        .map(|c| {
                            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                            format!("( {} )", pts.join(" "))
                        })
                        .collect();
                    format!("perm: {}", parts.join(" ; "))
                }),
        ]
    }

    proptest! {
        #[test]
        fn print_parse_idempotent(atoms in proptest::collection::vec(atom_text(), 1..4)) {
            let text = atoms.join(" x ");
            let first = parse_group_spec(&text).unwrap();
            let printed = first.canonical();
            let second = parse_group_spec(&printed).unwrap();
            prop_assert_eq!(second.canonical(), printed.clone());
            prop_assert_eq!(parse_group_spec(&second.canonical()).unwrap().canonical(), printed);
        }
    }
}
