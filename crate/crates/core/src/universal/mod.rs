//! Initial and terminal objects, universal morphisms, limits and Kan
//! extensions. Every dual construction is obtained by passing to opposite
//! categories rather than written out a second time.

mod kan;
mod limits;
mod morphism;

pub use kan::{kan_extension, verify_kan, KanDirection, KanExtension};
pub use limits::{
    colimit, colimit_functor, cone_as_nat_trans, cone_category, diagonal_functor, limit, limit_functor,
    verify_colimit, verify_limit, Cocone, ColimitFunctor, Cone, ConeCategory, Diagonal, LimitFunctor,
};
pub(crate) use limits::diagonal_into;
pub use morphism::{universal_morphism_from, universal_morphism_to, verify_universal, UniversalMorphism};

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Error, Result};

/// Objects with exactly one morphism to every object, ascending.
pub fn initial_objects(c: &FinCategory) -> Vec<ObId> {
    c.objects()
        .filter(|&x| c.objects().all(|y| c.hom(x, y).len() == 1))
        .collect()
}

/// The initial objects of `op(C)`.
pub fn terminal_objects(c: &FinCategory) -> Vec<ObId> {
    initial_objects(&c.op())
}

fn is_initial(c: &FinCategory, x: ObId) -> bool {
    c.objects().all(|y| c.hom(x, y).len() == 1)
}

/// The unique arrows `x → y` and `y → x` between two initial objects.
pub fn iso_between_initials(c: &FinCategory, x: ObId, y: ObId) -> Result<(MorId, MorId)> {
    for v in [x, y] {
        if v.0 >= c.n_ob() {
            return Err(Error::range("object", v.0, c.n_ob()));
        }
        if !is_initial(c, v) {
            return Err(Error::NotInitial(v));
        }
    }
    Ok((c.hom(x, y)[0], c.hom(y, x)[0]))
}

/// The unique arrows `x → y` and `y → x` between two terminal objects,
/// computed as the iso between the initial objects `y`, `x` of `op(C)`.
pub fn iso_between_terminals(c: &FinCategory, x: ObId, y: ObId) -> Result<(MorId, MorId)> {
    iso_between_initials(&c.op(), y, x).map_err(|e| match e {
        Error::NotInitial(v) => Error::NotTerminal(v),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete_category, indiscrete_category, initial_category, walking_arrow};

    #[test]
    fn initial_and_terminal() {
        assert_eq!(initial_objects(&walking_arrow()), vec![ObId(0)]);
        assert_eq!(terminal_objects(&walking_arrow()), vec![ObId(1)]);
        assert_eq!(terminal_objects(&walking_arrow().op()), vec![ObId(0)]);
        assert!(initial_objects(&discrete_category(2)).is_empty());
        assert_eq!(initial_objects(&indiscrete_category(3)).len(), 3);
        assert_eq!(terminal_objects(&indiscrete_category(2)), vec![ObId(0), ObId(1)]);
        assert!(initial_objects(&initial_category()).is_empty());
    }

    #[test]
    fn isos_between_universal_objects() {
        let c = indiscrete_category(2);
        let (f, g) = iso_between_initials(&c, ObId(0), ObId(1)).unwrap();
        assert_eq!(c.comp(g, f), c.identity(ObId(0)));
        assert_eq!(c.comp(f, g), c.identity(ObId(1)));
        assert_eq!(iso_between_terminals(&c, ObId(0), ObId(1)).unwrap(), (f, g));
        let two = walking_arrow();
        let id = two.identity(ObId(0));
        assert_eq!(iso_between_initials(&two, ObId(0), ObId(0)).unwrap(), (id, id));
        assert_eq!(iso_between_initials(&two, ObId(0), ObId(1)), Err(Error::NotInitial(ObId(1))));
        assert_eq!(iso_between_terminals(&chain(3), ObId(2), ObId(0)), Err(Error::NotTerminal(ObId(0))));
    }
}
