//! Braid words, layered diagrams, and Markov moves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;

/// A braid word whose closure is a knot.
///
/// Letters are nonzero integers: `i` is the positive generator crossing
/// strand columns `i` and `i+1`, `-i` its inverse. Columns are numbered
/// 1..=b left to right, with the braid axis to the right of column `b`
/// and the basepoint on the closure arc of column 1, the outermost
/// strand.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::MalformedWord(format!(
                "need at least 2 strands, got {}",
                strands
            )));
        }
        if letters.is_empty() {
            return Err(BraidError::MalformedWord("empty word".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::MalformedWord(format!(
                    "letter {} out of range for {} strands",
                    l, strands
                )));
            }
        }
        let w = BraidWord { strands, letters };
        let comps = w.closure_components();
        if comps != 1 {
            return Err(BraidError::NotAKnot { components: comps });
        }
        Ok(w)
    }

    /// Parse the text form `b=<int>; <signed ints>`.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let text = text.trim();
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| BraidError::MalformedWord("expected `b=<int>; <letters>`".into()))?;
        let head = head.trim();
        let strands: usize = head
            .strip_prefix("b=")
            .or_else(|| head.strip_prefix("b ="))
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| BraidError::MalformedWord(format!("bad strand count `{}`", head)))?;
        let mut letters = Vec::new();
        for tok in tail.split_whitespace() {
            let l: i32 = tok
                .parse()
                .map_err(|_| BraidError::MalformedWord(format!("bad letter `{}`", tok)))?;
            letters.push(l);
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn negative_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The permutation of the closure: `perm[j]` is the column where the
    /// strand entering at column `j+1` exits (0-indexed).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Number of components of the braid closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        cycles
    }

    pub fn apply_markov(&self, mv: &MarkovMove) -> Result<BraidWord, BraidError> {
        let mut letters = self.letters.clone();
        let mut strands = self.strands;
        match *mv {
            MarkovMove::Conjugate { amount } => {
                let k = amount % letters.len();
                letters.rotate_left(k);
            }
            MarkovMove::StabilizePositive => {
                letters.push(strands as i32);
                strands += 1;
            }
            MarkovMove::StabilizeNegative => {
                letters.push(-(strands as i32));
                strands += 1;
            }
            MarkovMove::Destabilize => {
                let top = strands as i32 - 1;
                let last = *letters.last().ok_or_else(|| {
                    BraidError::InapplicableMove("destabilize of empty word".into())
                })?;
                let uses = letters.iter().filter(|l| l.abs() == top).count();
                if last.abs() != top || uses != 1 || strands < 3 {
                    return Err(BraidError::InapplicableMove(format!(
                        "destabilize needs a single trailing ±{}",
                        top
                    )));
                }
                letters.pop();
                strands -= 1;
            }
            MarkovMove::Reid2Insert { index, pos } => {
                if index == 0 || index >= strands || pos > letters.len() {
                    return Err(BraidError::InapplicableMove(format!(
                        "cannot insert canceling pair σ{} at {}",
                        index, pos
                    )));
                }
                letters.insert(pos, -(index as i32));
                letters.insert(pos, index as i32);
            }
            MarkovMove::Reid3 { pos } => {
                if pos + 3 > letters.len() {
                    return Err(BraidError::InapplicableMove(
                        "braid relation needs three letters".into(),
                    ));
                }
                let (a, b, c) = (letters[pos], letters[pos + 1], letters[pos + 2]);
                // σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}, same sign throughout
                let ok = a == c
                    && a.signum() == b.signum()
                    && (b.abs() - a.abs() == 1 || a.abs() - b.abs() == 1);
                if !ok {
                    return Err(BraidError::InapplicableMove(format!(
                        "no braid relation at [{} {} {}]",
                        a, b, c
                    )));
                }
                letters[pos] = b;
                letters[pos + 1] = a;
                letters[pos + 2] = b;
            }
        }
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b={};", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

/// Markov-move generators for the invariance harness.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MarkovMove {
    /// Rotate the word left, conjugating by its prefix.
    Conjugate { amount: usize },
    /// Append the positive generator on a new strand.
    StabilizePositive,
    /// Append the negative generator on a new strand.
    StabilizeNegative,
    /// Remove a single trailing generator on the last strand.
    Destabilize,
    /// Insert the canceling pair σ_index σ_index⁻¹ at a word position.
    Reid2Insert { index: usize, pos: usize },
    /// Rewrite σ_i σ_{i±1} σ_i as σ_{i±1} σ_i σ_{i±1} in place.
    Reid3 { pos: usize },
}

/// One horizontal layer of a layered diagram: at most one crossing, and
/// a bivalent vertex on every strand not in the crossing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Layer {
    /// Crossing column (1..b-1) and sign; None for an all-bivalent layer.
    pub crossing: Option<(usize, bool)>,
}

/// A braid word compiled to layers with deterministic edge labels.
///
/// Edge labels: boundary levels run bottom to top, 0..=L where L is the
/// layer count; within a level, columns run left to right. The edge at
/// (level, col) is `level*b + col - 1` for level < L. The top boundary
/// re-identifies with the bottom through the closure arcs, except at
/// column 1 where the basepoint splits the outermost strand into edge 0
/// (leaving the basepoint) and edge n = b*L (entering it).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LayeredBraidDiagram {
    strands: usize,
    layers: Vec<Layer>,
}

impl LayeredBraidDiagram {
    pub fn from_word(w: &BraidWord) -> Self {
        let layers = w
            .letters()
            .iter()
            .map(|&l| Layer {
                crossing: Some((l.unsigned_abs() as usize, l > 0)),
            })
            .collect();
        LayeredBraidDiagram {
            strands: w.strands(),
            layers,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    /// Index of the edge entering the basepoint.
    pub fn last_edge(&self) -> usize {
        self.strands * self.num_layers()
    }

    pub fn num_edges(&self) -> usize {
        self.last_edge() + 1
    }

    /// Edge label at a boundary level (0..=L) and column (1..=b).
    pub fn edge_at(&self, level: usize, col: usize) -> usize {
        debug_assert!((1..=self.strands).contains(&col));
        debug_assert!(level <= self.num_layers());
        if level == self.num_layers() {
            if col == 1 {
                self.last_edge()
            } else {
                col - 1
            }
        } else {
            level * self.strands + (col - 1)
        }
    }

    /// Paper strand numbering: 1 is innermost (nearest the braid axis),
    /// b is outermost (carrying the basepoint).
    pub fn axis_distance(&self, col: usize) -> usize {
        self.strands + 1 - col
    }

    /// Positions of crossings: (layer index, column, positive).
    pub fn crossings(&self) -> Vec<(usize, usize, bool)> {
        self.layers
            .iter()
            .enumerate()
            .filter_map(|(i, l)| l.crossing.map(|(c, s)| (i, c, s)))
            .collect()
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings().len()
    }

    pub fn negative_count(&self) -> usize {
        self.layers
            .iter()
            .filter(|l| matches!(l.crossing, Some((_, false))))
            .count()
    }

    /// Total bivalent vertices over all layers of the unresolved diagram.
    pub fn bivalent_count(&self) -> usize {
        self.layers
            .iter()
            .map(|l| {
                if l.crossing.is_some() {
                    self.strands - 2
                } else {
                    self.strands
                }
            })
            .sum()
    }

    /// Insert an all-bivalent layer below layer `k`.
    pub fn with_bivalent_layer(&self, k: usize) -> Self {
        let mut layers = self.layers.clone();
        layers.insert(k, Layer { crossing: None });
        LayeredBraidDiagram {
            strands: self.strands,
            layers,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig8() -> BraidWord {
        BraidWord::parse("b=3; 1 -2 1 -2").unwrap()
    }

    #[test]
    fn parse_trefoil() {
        let w = BraidWord::parse("b=2; 1 1 1").unwrap();
        assert_eq!(w.strands(), 2);
        assert_eq!(w.letters(), &[1, 1, 1]);
    }

    #[test]
    fn parse_fig8() {
        let w = fig8();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(w.negative_count(), 2);
        assert_eq!(w.writhe(), 0);
    }

    #[test]
    fn reject_links() {
        // (σ1)^3 on 3 strands closes to a 2-component link
        match BraidWord::parse("b=3; 1 1 1") {
            Err(BraidError::NotAKnot { components }) => assert_eq!(components, 2),
            other => panic!("expected NotAKnot, got {:?}", other),
        }
    }

    #[test]
    fn reject_out_of_range_letters() {
        assert!(matches!(
            BraidWord::parse("b=2; 2"),
            Err(BraidError::MalformedWord(_))
        ));
        assert!(matches!(
            BraidWord::parse("b=2; x"),
            Err(BraidError::MalformedWord(_))
        ));
    }

    #[test]
    fn fig8_diagram_labels() {
        let d = LayeredBraidDiagram::from_word(&fig8());
        assert_eq!(d.num_layers(), 4);
        assert_eq!(d.last_edge(), 12);
        // bottom boundary
        assert_eq!(d.edge_at(0, 1), 0);
        assert_eq!(d.edge_at(0, 2), 1);
        assert_eq!(d.edge_at(0, 3), 2);
        // interior boundaries
        assert_eq!(d.edge_at(1, 1), 3);
        assert_eq!(d.edge_at(3, 2), 10);
        // top boundary reuses x1, x2 and introduces x12 at the basepoint
        assert_eq!(d.edge_at(4, 1), 12);
        assert_eq!(d.edge_at(4, 2), 1);
        assert_eq!(d.edge_at(4, 3), 2);
        assert_eq!(d.bivalent_count(), 4);
    }

    #[test]
    fn smallest_diagrams() {
        let d = LayeredBraidDiagram::from_word(&BraidWord::parse("b=2; 1").unwrap());
        assert_eq!(d.num_layers(), 1);
        assert_eq!(d.last_edge(), 2);
        assert_eq!(d.bivalent_count(), 0);

        let d = LayeredBraidDiagram::from_word(&BraidWord::parse("b=3; 1").unwrap());
        assert_eq!(d.num_layers(), 1);
        assert_eq!(d.bivalent_count(), 1);
    }

    #[test]
    fn diagram_is_deterministic() {
        let a = LayeredBraidDiagram::from_word(&fig8());
        let b = LayeredBraidDiagram::from_word(&fig8());
        assert_eq!(a, b);
    }

    #[test]
    fn conjugate_rotates() {
        let w = fig8();
        let c = w.apply_markov(&MarkovMove::Conjugate { amount: 1 }).unwrap();
        assert_eq!(c.letters(), &[-2, 1, -2, 1]);
    }

    #[test]
    fn stabilize_appends_new_generator() {
        let w = BraidWord::parse("b=2; 1 1 1").unwrap();
        let s = w.apply_markov(&MarkovMove::StabilizePositive).unwrap();
        assert_eq!(s.strands(), 3);
        assert_eq!(s.letters(), &[1, 1, 1, 2]);
    }

    #[test]
    fn destabilize_undoes_stabilize() {
        let w = BraidWord::parse("b=2; 1 1 1").unwrap();
        for mv in [MarkovMove::StabilizePositive, MarkovMove::StabilizeNegative] {
            let s = w.apply_markov(&mv).unwrap();
            let back = s.apply_markov(&MarkovMove::Destabilize).unwrap();
            assert_eq!(back, w);
        }
        assert!(w.apply_markov(&MarkovMove::Destabilize).is_err());
    }

    #[test]
    fn reid2_insert_canceling_pair() {
        let w = BraidWord::parse("b=2; 1 1 1").unwrap();
        let r = w
            .apply_markov(&MarkovMove::Reid2Insert { index: 1, pos: 0 })
            .unwrap();
        assert_eq!(r.letters(), &[1, -1, 1, 1, 1]);
    }

    #[test]
    fn reid3_swaps_triple() {
        let w = BraidWord::parse("b=3; 1 2 1 -2").unwrap();
        let r = w.apply_markov(&MarkovMove::Reid3 { pos: 0 }).unwrap();
        assert_eq!(r.letters(), &[2, 1, 2, -2]);
        assert!(w.apply_markov(&MarkovMove::Reid3 { pos: 1 }).is_err());
    }

    #[test]
    fn moves_preserve_knottedness() {
        let w = fig8();
        let moves = [
            MarkovMove::Conjugate { amount: 3 },
            MarkovMove::StabilizePositive,
            MarkovMove::StabilizeNegative,
            MarkovMove::Reid2Insert { index: 2, pos: 2 },
        ];
        for mv in moves {
            let v = w.apply_markov(&mv).unwrap();
            assert_eq!(v.closure_components(), 1);
        }
    }

    #[test]
    fn bivalent_layer_insertion() {
        let d = LayeredBraidDiagram::from_word(&fig8()).with_bivalent_layer(2);
        assert_eq!(d.num_layers(), 5);
        assert_eq!(d.num_crossings(), 4);
        assert_eq!(d.bivalent_count(), 4 + 3);
        assert_eq!(d.last_edge(), 15);
    }
}
