use std::cmp::Ordering;
use std::fmt;

/// A wedge product of distinct basis covectors in ascending order,
/// stored as a bitset over positions `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u16);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub const fn from_mask(mask: u16) -> Blade {
        Blade(mask)
    }

    pub fn from_positions(positions: &[usize]) -> Blade {
        Blade(positions.iter().fold(0, |m, &p| m | (1 << p)))
    }

    pub const fn mask(self) -> u16 {
        self.0
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, position: usize) -> bool {
        self.0 & (1 << position) != 0
    }

    pub const fn is_disjoint(self, other: Blade) -> bool {
        self.0 & other.0 == 0
    }

    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..16).filter(move |&p| mask & (1 << p) != 0)
    }

    pub const fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub const fn without(self, position: usize) -> Blade {
        Blade(self.0 & !(1 << position))
    }

    pub const fn complement(self, dim: usize) -> Blade {
        Blade(!self.0 & ((1u16 << dim) - 1))
    }

    /// Sign of `self ∧ other` relative to the ascending blade `self ∪ other`:
    /// the parity of pairs `(i ∈ self, j ∈ other)` with `i > j`. Zero if the
    /// blades overlap.
    pub fn wedge_sign(self, other: Blade) -> i32 {
        if !self.is_disjoint(other) {
            return 0;
        }
        let crossings: u32 = self
            .positions()
            .map(|i| (other.0 & ((1u16 << i) - 1)).count_ones())
            .sum();
        if crossings % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign picked up when the basis vector at `position` is moved to the
    /// front of the blade, i.e. the sign of `i_{e_position}` on this blade.
    pub fn contraction_sign(self, position: usize) -> i32 {
        if (self.0 & ((1u16 << position) - 1)).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Ord for Blade {
    /// Grade first, then lexicographic on the ascending index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Blade{:?}", self.positions().collect::<Vec<_>>())
    }
}

/// Sign of the permutation that sorts `items` ascending. Items must be
/// distinct.
pub(crate) fn sort_sign(items: &[usize]) -> i32 {
    let inversions = items
        .iter()
        .enumerate()
        .map(|(i, a)| items[i + 1..].iter().filter(|b| *b < a).count())
        .sum::<usize>();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
