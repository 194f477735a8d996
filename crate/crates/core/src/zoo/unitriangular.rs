//! `UT(3, q)`: lower unitriangular 3×3 matrices over GF(q).
//!
//! The matrix with entries `a` (row 2, col 1), `b` (row 3, col 1) and `c`
//! (row 3, col 2) is stored as the triple `(a, b, c)` and multiplies as
//! `(a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2+c1·a2, c1+c2)`. Its index is
//! `(a·q + b)·q + c` with field codes from [`Field`].

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Label};

use super::field::{make_field, Field, FieldElement};

/// Largest `q` accepted; the group has `q^3` elements.
pub const MAX_UT_FIELD: u32 = 81;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UtElement {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

impl UtElement {
    pub fn mul(&self, other: &UtElement, f: &Field) -> UtElement {
        UtElement {
            a: f.add(self.a, other.a),
            b: f.add(f.add(self.b, other.b), f.mul(self.c, other.a)),
            c: f.add(self.c, other.c),
        }
    }

    pub fn index(&self, q: u32) -> Elem {
        (self.a.0 * q + self.b.0) * q + self.c.0
    }

    pub fn from_index(x: Elem, q: u32) -> UtElement {
        UtElement {
            a: FieldElement(x / (q * q)),
            b: FieldElement((x / q) % q),
            c: FieldElement(x % q),
        }
    }
}

pub fn unitriangular(p: u32, n: u32) -> Result<Arc<FiniteGroup>> {
    unitriangular_group(p, n).map(Arc::new)
}

pub(crate) fn unitriangular_group(p: u32, n: u32) -> Result<FiniteGroup> {
    let field = Arc::new(make_field(p, n)?);
    unitriangular_over(field)
}

/// `UT(3, F)` for an explicit field.
pub fn unitriangular_over(field: Arc<Field>) -> Result<FiniteGroup> {
    let q = field.order();
    if q > MAX_UT_FIELD {
        return Err(Error::capacity("unitriangular field order", MAX_UT_FIELD as u64));
    }
    let order = q * q * q;
    let labels = (0..order)
        .map(|x| {
            let e = UtElement::from_index(x, q);
            Label::Matrix(vec![e.a.0, e.b.0, e.c.0])
        })
        .collect();
    let f = field.clone();
    let mul = move |x: Elem, y: Elem| {
        UtElement::from_index(x, q)
            .mul(&UtElement::from_index(y, q), &f)
            .index(q)
    };
    // (a,b,c)^{-1} = (-a, -b + c·a, -c)
    let inv = move |x: Elem| {
        let e = UtElement::from_index(x, q);
        UtElement {
            a: field.neg(e.a),
            b: field.add(field.neg(e.b), field.mul(e.c, e.a)),
            c: field.neg(e.c),
        }
        .index(q)
    };
    Ok(FiniteGroup::from_fn(format!("UT3({q})"), labels, mul, inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::center;

    #[test]
    fn orders_and_centers() {
        for (p, n, q) in [(2, 1, 2usize), (3, 1, 3), (2, 2, 4), (3, 2, 9)] {
            let g = unitriangular(p, n).unwrap();
            assert_eq!(g.order(), q * q * q);
            let z = center(&g);
            assert_eq!(z.order(), q);
            // Z = {(0, b, 0)}
            let q = q as u32;
            assert!(z.elements().all(|x| {
                let e = UtElement::from_index(x, q);
                e.a.0 == 0 && e.c.0 == 0
            }));
        }
    }

    #[test]
    fn axioms() {
        unitriangular(2, 2).unwrap().verify_axioms().unwrap();
        unitriangular(3, 1).unwrap().verify_axioms().unwrap();
        unitriangular(3, 2).unwrap().verify_axioms().unwrap();
    }

    #[test]
    fn matrix_law_matches_explicit_product() {
        // Multiply genuine 3x3 lower unitriangular matrices over GF(4).
        let f = make_field(2, 2).unwrap();
        let g = unitriangular(2, 2).unwrap();
        let matrix = |e: UtElement| {
            let (z, o) = (f.zero(), f.one());
            [[o, z, z], [e.a, o, z], [e.b, e.c, o]]
        };
        for x in g.elements().step_by(5) {
            for y in g.elements().step_by(7) {
                let (mx, my) = (
                    matrix(UtElement::from_index(x, 4)),
                    matrix(UtElement::from_index(y, 4)),
                );
                let mut prod = [[f.zero(); 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        for k in 0..3 {
                            prod[i][j] = f.add(prod[i][j], f.mul(mx[i][k], my[k][j]));
                        }
                    }
                }
                let z = UtElement::from_index(g.mul(x, y), 4);
                assert_eq!(matrix(z), prod);
            }
        }
    }
}
