//! Checks that constructions obtained through `op` agree with their direct
//! definitions.

use serde::Serialize;

use crate::category::{FinCategory, MorId, ObId};
use crate::universal::{initial_objects, iso_between_initials, iso_between_terminals, terminal_objects};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub category: String,
    /// `op(op(C))` is structurally equal to `C`.
    pub involution: bool,
    /// `op(C)` is structurally equal to `C`; reported, not required.
    pub self_dual: bool,
    /// Terminal objects computed through `op` match the direct search.
    pub terminal_agreement: bool,
    /// For each pair of initial objects, the isomorphism found in `C` is the
    /// isomorphism between the same objects as terminals of `op(C)`.
    pub initial_iso_agreement: bool,
    pub terminal_iso_agreement: bool,
    pub terminal_objects: Vec<ObId>,
    pub initial_objects: Vec<ObId>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.involution && self.terminal_agreement && self.initial_iso_agreement && self.terminal_iso_agreement
    }
}

/// Terminal objects by definition: every object has exactly one morphism in.
pub fn terminal_objects_direct(c: &FinCategory) -> Vec<ObId> {
    c.objects()
        .filter(|&t| c.objects().all(|x| c.hom(x, t).len() == 1))
        .collect()
}

fn unique(c: &FinCategory, a: ObId, b: ObId) -> Option<MorId> {
    match c.hom(a, b) {
        [m] => Some(*m),
        _ => None,
    }
}

pub fn duality_check(c: &FinCategory) -> DualityReport {
    let op = c.op();
    let terminals = terminal_objects(c);
    let initials = initial_objects(c);

    let initial_iso_agreement = initials.iter().all(|&x| {
        initials.iter().all(|&y| {
            let here = iso_between_initials(c, x, y).ok();
            let there = iso_between_terminals(&op, x, y).ok().map(|(u, v)| (v, u));
            here.is_some() && here == there && here == unique(c, x, y).zip(unique(c, y, x))
        })
    });
    let terminal_iso_agreement = terminals.iter().all(|&x| {
        terminals.iter().all(|&y| {
            let here = iso_between_terminals(c, x, y).ok();
            here.is_some() && here == unique(c, x, y).zip(unique(c, y, x))
        })
    });

    DualityReport {
        category: c.name().to_owned(),
        involution: op.op() == *c,
        self_dual: op == *c,
        terminal_agreement: terminals == terminal_objects_direct(c),
        initial_iso_agreement,
        terminal_iso_agreement,
        terminal_objects: terminals,
        initial_objects: initials,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, indiscrete_category, terminal_category, walking_arrow};

    #[test]
    fn arrow_and_point() {
        let r = duality_check(&walking_arrow());
        assert!(r.passed());
        assert!(!r.self_dual);
        assert_eq!(r.terminal_objects, vec![ObId(1)]);
        let r = duality_check(&terminal_category());
        assert!(r.passed() && r.self_dual);
    }

    #[test]
    fn several_initials() {
        let r = duality_check(&indiscrete_category(3));
        assert!(r.passed());
        assert_eq!(r.initial_objects.len(), 3);
        assert!(duality_check(&chain(4)).passed());
    }
}
