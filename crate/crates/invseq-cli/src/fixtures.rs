//! Embedded reference sequences for the offline `oeis-check` command.
//!
//! Terms come from the reference count tables (lengths 1 through 9); the
//! linked pattern or triple says how the artifact recomputes them. No
//! network access anywhere.

use invseq::checks::{GT_LT_DASH_TERMS, TABLE1};

/// What to recompute when checking a fixture.
pub enum Linked {
    Patterns(&'static [&'static str]),
    Triple(&'static str),
}

pub struct Fixture {
    pub oeis_id: &'static str,
    pub description: &'static str,
    /// Index of the first term: terms[i] is the count for length offset + i.
    pub offset: usize,
    pub terms: Vec<u128>,
    pub linked: Linked,
}

pub fn all_fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = TABLE1
        .iter()
        .map(|row| Fixture {
            oeis_id: row.oeis_id,
            description: row.description,
            offset: 1,
            terms: row.terms.to_vec(),
            linked: Linked::Patterns(row.patterns),
        })
        .collect();
    out.push(Fixture {
        oeis_id: "A033321",
        description: "(>,<,-)-avoiders; also permutations avoiding 2143, 3142, 4132",
        offset: 1,
        terms: GT_LT_DASH_TERMS.to_vec(),
        linked: Linked::Triple(">,<,-"),
    });
    out
}

pub fn find(id: &str) -> Option<Fixture> {
    all_fixtures().into_iter().find(|f| f.oeis_id.eq_ignore_ascii_case(id))
}
