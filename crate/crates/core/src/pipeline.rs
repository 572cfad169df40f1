//! The composed bijections `Ψ` and `Φ` on symmetric transversals, and the
//! gray/white board colouring that reduces `Φ` to `Ψ`.
//!
//! `Ψ = χ′ ∘ φ⁻¹ ∘ ψ̄⁻¹ ∘ θ ∘ ψ ∘ φ ∘ χ` turns a 321-avoiding symmetric
//! transversal into a 123-avoiding one on the same diagram with the same
//! peaks.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fillings::{chi, chi_inv, find_in_region, transversal_find, Transversal, YoungDiagram};
use crate::matchings::{phi, phi_inv, Matching, OscillatingTableau};
use crate::paths::{psi, psi_inv, psibar, psibar_inv, theta, theta_inv, DyckPair};
use crate::perm::Permutation;

/// Every intermediate object of one `Ψ` evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiTrace {
    pub transversal: Transversal,
    pub matching: Matching,
    pub tableau: OscillatingTableau,
    pub pair: DyckPair,
    pub pair_prime: DyckPair,
    pub tableau_prime: OscillatingTableau,
    pub matching_prime: Matching,
    pub transversal_prime: Transversal,
}

fn require_symmetric(t: &Transversal) -> Result<()> {
    if !t.is_symmetric() {
        return Err(Error::Precondition("transversal is not symmetric on a self-conjugate diagram".into()));
    }
    Ok(())
}

fn require_avoids(t: &Transversal, pat: &Permutation) -> Result<()> {
    match transversal_find(t, pat) {
        None => Ok(()),
        Some(positions) => Err(Error::PatternPresent {
            pattern: pat.clone(),
            positions,
        }),
    }
}

fn j3() -> Permutation {
    Permutation::decreasing(3)
}

fn i3() -> Permutation {
    Permutation::identity(3)
}

pub fn psi_cap_trace(t: &Transversal) -> Result<PsiTrace> {
    require_symmetric(t)?;
    require_avoids(t, &j3())?;
    let matching = chi(t);
    let tableau = phi(&matching);
    let pair = psi(&tableau)?;
    let pair_prime = theta(&pair)?;
    let tableau_prime = psibar_inv(&pair_prime)?;
    let matching_prime = phi_inv(&tableau_prime)?;
    let transversal_prime = chi_inv(&matching_prime)?;
    Ok(PsiTrace {
        transversal: t.clone(),
        matching,
        tableau,
        pair,
        pair_prime,
        tableau_prime,
        matching_prime,
        transversal_prime,
    })
}

pub fn psi_cap(t: &Transversal) -> Result<Transversal> {
    psi_cap_trace(t).map(|trace| trace.transversal_prime)
}

pub fn psi_cap_inv(t: &Transversal) -> Result<Transversal> {
    require_symmetric(t)?;
    require_avoids(t, &i3())?;
    let o = phi(&chi(t));
    let pair = theta_inv(&psibar(&o)?)?;
    chi_inv(&phi_inv(&psi_inv(&pair)?)?)
}

/// Colouring of a transversal's diagram relative to a pattern `τ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoardMask {
    /// White squares `(column, row)` of the original diagram.
    pub white: BTreeSet<(u32, u32)>,
    pub gray_columns: BTreeSet<u32>,
    pub gray_rows: BTreeSet<u32>,
    /// The white squares with gray rows and columns deleted.
    pub white_diagram: YoungDiagram,
    /// Original index of each column of `white_diagram`.
    pub column_embedding: Vec<u32>,
    /// Original index of each row of `white_diagram`.
    pub row_embedding: Vec<u32>,
}

impl BoardMask {
    pub fn is_white(&self, col: u32, row: u32) -> bool {
        self.white.contains(&(col, row))
    }

    pub fn is_symmetric(&self) -> bool {
        self.white.iter().all(|&(c, r)| self.white.contains(&(r, c)))
    }

    /// The 1s of `t` inside the white board, re-indexed.
    pub fn restrict(&self, t: &Transversal) -> Transversal {
        let mut row_index = vec![0u32; t.size() + 1];
        for (i, &r) in self.row_embedding.iter().enumerate() {
            row_index[r as usize] = i as u32 + 1;
        }
        let ones = self
            .column_embedding
            .iter()
            .map(|&c| row_index[t.ones()[c as usize - 1] as usize])
            .collect();
        Transversal::new_unchecked(self.white_diagram.clone(), ones)
    }

    /// Replace the white part of `t` by `inner`.
    pub fn embed(&self, t: &Transversal, inner: &Transversal) -> Transversal {
        let mut ones = t.ones().to_vec();
        for (i, &r) in inner.ones().iter().enumerate() {
            ones[self.column_embedding[i] as usize - 1] = self.row_embedding[r as usize - 1];
        }
        Transversal::new_unchecked(t.diagram().clone(), ones)
    }
}

/// A square is white when the board strictly below and to the right of it
/// contains `τ` or `τ⁻¹`; each 1 on a gray square then grays its row and
/// column.
pub fn color_board(t: &Transversal, tau: &Permutation) -> Result<BoardMask> {
    if tau.is_empty() {
        return Err(Error::Precondition("board colouring needs a nonempty pattern".into()));
    }
    let tau_inv = tau.inverse();
    let d = t.diagram();
    let k = t.size() as u32;
    let rows = d.row_lengths();
    let mut white = BTreeSet::new();
    for c in 1..=k {
        // White squares in a column form a top segment: shrinking the
        // south-east board can only lose occurrences.
        for r in 1..=rows.len() as u32 {
            if !d.contains(c, r) {
                break;
            }
            let hit = find_in_region(t, tau, c, r).is_some()
                || (tau_inv != *tau && find_in_region(t, &tau_inv, c, r).is_some());
            if !hit {
                break;
            }
            white.insert((c, r));
        }
    }
    let mut gray_columns = BTreeSet::new();
    let mut gray_rows = BTreeSet::new();
    for (i, &r) in t.ones().iter().enumerate() {
        let c = i as u32 + 1;
        if !white.contains(&(c, r)) {
            gray_columns.insert(c);
            gray_rows.insert(r);
        }
    }
    white.retain(|(c, r)| !gray_columns.contains(c) && !gray_rows.contains(r));
    let column_embedding: Vec<u32> = (1..=k).filter(|c| !gray_columns.contains(c)).collect();
    let row_embedding: Vec<u32> = (1..=k).filter(|r| !gray_rows.contains(r)).collect();
    let lengths = row_embedding
        .iter()
        .map(|&r| column_embedding.iter().filter(|&&c| white.contains(&(c, r))).count() as u32)
        .collect();
    let white_diagram = YoungDiagram::new(lengths).expect("white squares form an order ideal");
    Ok(BoardMask {
        white,
        gray_columns,
        gray_rows,
        white_diagram,
        column_embedding,
        row_embedding,
    })
}

fn phi_cap_with(t: &Transversal, tau: &Permutation, forbidden_front: Permutation, inner: fn(&Transversal) -> Result<Transversal>) -> Result<Transversal> {
    require_symmetric(t)?;
    require_avoids(t, &forbidden_front.direct_sum(tau))?;
    if tau.is_empty() {
        return inner(t);
    }
    let mask = color_board(t, tau)?;
    if mask.column_embedding.is_empty() {
        return Ok(t.clone());
    }
    let mapped = inner(&mask.restrict(t))?;
    Ok(mask.embed(t, &mapped))
}

/// `Φ`: applies `Ψ` to the white part of `t` and keeps the gray 1s.
/// An empty `τ` reduces to `Ψ` itself.
pub fn phi_cap(t: &Transversal, tau: &Permutation) -> Result<Transversal> {
    phi_cap_with(t, tau, j3(), psi_cap)
}

/// The colouring of `Φ(T)` reproduces that of `T`, so the inverse colours
/// its own input and applies `Ψ⁻¹` to the white part.
pub fn phi_cap_inv(t: &Transversal, tau: &Permutation) -> Result<Transversal> {
    phi_cap_with(t, tau, i3(), psi_cap_inv)
}

fn require_involution(p: &Permutation) -> Result<()> {
    if !p.is_involution() {
        return Err(Error::Precondition(format!("{p} is not an involution")));
    }
    Ok(())
}

pub fn phi_involution(p: &Permutation, tau: &Permutation) -> Result<Permutation> {
    require_involution(p)?;
    Ok(phi_cap(&Transversal::from_permutation(p), tau)?.as_permutation())
}

pub fn phi_involution_inv(p: &Permutation, tau: &Permutation) -> Result<Permutation> {
    require_involution(p)?;
    Ok(phi_cap_inv(&Transversal::from_permutation(p), tau)?.as_permutation())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillings::transversal_peaks;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn figure3() -> Transversal {
        Transversal::new(
            YoungDiagram::new(vec![8, 8, 8, 8, 8, 5, 5, 5]).unwrap(),
            vec![6, 2, 8, 4, 7, 1, 5, 3],
        )
        .unwrap()
    }

    #[test]
    fn psi_worked_chain() {
        let trace = psi_cap_trace(&figure3()).unwrap();
        assert_eq!(trace.transversal_prime.ones(), &[6, 4, 8, 2, 7, 1, 5, 3]);
        assert_eq!(trace.pair.q().to_string(), "UDUDUUDUDUDDUDUD");
        assert_eq!(trace.pair_prime.q().to_string(), "UUDUDUUDUDDUDUDD");
        assert_eq!(psi_cap_inv(&trace.transversal_prime).unwrap(), figure3());
        assert_eq!(transversal_peaks(&trace.transversal_prime), transversal_peaks(&figure3()));
    }

    #[test]
    fn psi_small_anchors() {
        let id3 = Transversal::from_permutation(&Permutation::identity(3));
        let trace = psi_cap_trace(&id3).unwrap();
        assert_eq!(trace.matching.arcs(), &[(1, 6), (2, 5), (3, 4)]);
        assert_eq!(trace.matching_prime.arcs(), &[(1, 4), (2, 5), (3, 6)]);
        assert_eq!(trace.transversal_prime.as_permutation(), p("321"));
        let one = Transversal::from_permutation(&p("1"));
        assert_eq!(psi_cap(&one).unwrap(), one);
        assert!(matches!(
            psi_cap(&Transversal::from_permutation(&p("321"))),
            Err(Error::PatternPresent { .. })
        ));
        assert!(psi_cap(&Transversal::from_permutation(&p("231"))).is_err());
    }

    #[test]
    fn coloring_of_identity() {
        let t = Transversal::from_permutation(&Permutation::identity(4));
        let mask = color_board(&t, &p("1")).unwrap();
        assert_eq!(mask.gray_columns, BTreeSet::from([4]));
        assert_eq!(mask.gray_rows, BTreeSet::from([4]));
        assert_eq!(mask.white_diagram, YoungDiagram::square(3));
        assert_eq!(mask.restrict(&t).ones(), &[1, 2, 3]);
        assert!(mask.is_symmetric());
        assert!(color_board(&t, &Permutation::empty()).is_err());
    }

    #[test]
    fn phi_anchors() {
        assert_eq!(phi_involution(&p("1234"), &p("1")).unwrap(), p("3214"));
        assert_eq!(phi_involution_inv(&p("3214"), &p("1")).unwrap(), p("1234"));
        // Too short to hold 12 below any square, so every square is gray.
        assert_eq!(phi_involution(&p("21"), &p("12")).unwrap(), p("21"));
        assert_eq!(phi_involution(&p("123"), &Permutation::empty()).unwrap(), p("321"));
        assert!(phi_involution(&p("3214"), &p("1")).is_err());
        assert_eq!(phi_involution(&p("4321"), &p("1")).unwrap(), p("4321"));
    }
}
