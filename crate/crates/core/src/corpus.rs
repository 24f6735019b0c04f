//! The test corpus: small uniform matroids, three projective geometries,
//! their one-step minors, and a few matroids with parallel elements.

use std::collections::HashSet;

use crate::matroid::Matroid;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub matroid: Matroid,
}

fn entry(name: impl Into<String>, matroid: Matroid) -> CorpusEntry {
    CorpusEntry { name: name.into(), matroid }
}

/// `U_{r,n}` for `1 <= r <= n <= 8`, then `PG(2,2)`, `PG(2,3)`, `PG(3,2)`.
pub fn base_matroids() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for r in 1..=n {
            out.push(entry(format!("uniform:{r},{n}"), Matroid::uniform(r, n).unwrap()));
        }
    }
    for (d, q) in [(2, 2), (2, 3), (3, 2)] {
        out.push(entry(format!("pg:{d},{q}"), Matroid::projective_geometry(d, q).unwrap()));
    }
    out
}

/// Base matroids plus every single-element deletion and every contraction by
/// a proper nonempty flat, without repeated labelled matroids.
pub fn minor_closed_corpus() -> Vec<CorpusEntry> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |e: CorpusEntry, out: &mut Vec<CorpusEntry>| {
        if seen.insert(e.matroid.canonical_key()) {
            out.push(e);
        }
    };
    for base in base_matroids() {
        let m = &base.matroid;
        let mut minors = Vec::new();
        for e in 0..m.n() {
            if let Ok(minor) = m.delete(e) {
                minors.push(entry(format!("{}\\{e}", base.name), minor.matroid));
            }
        }
        let ground = m.ground_set();
        for (_, flat) in m.flats().iter() {
            if flat.is_empty() || flat == ground {
                continue;
            }
            if let Ok(minor) = m.contract(flat) {
                minors.push(entry(format!("{}/{:?}", base.name, flat), minor.matroid));
            }
        }
        push(base, &mut out);
        for minor in minors {
            push(minor, &mut out);
        }
    }
    out
}

/// Fano and `U_{2,3}` with one element doubled, and the Fano plane with two
/// different elements doubled.
pub fn parallel_extensions() -> Vec<CorpusEntry> {
    let fano = Matroid::projective_geometry(2, 2).unwrap();
    let u23 = Matroid::uniform(2, 3).unwrap();
    let u34 = Matroid::uniform(3, 4).unwrap();
    vec![
        entry("pg:2,2+parallel", fano.parallel_extension(0).unwrap()),
        entry("pg:2,2+parallel2", fano.parallel_extension(0).unwrap().parallel_extension(1).unwrap()),
        entry("uniform:2,3+parallel", u23.parallel_extension(0).unwrap()),
        entry("uniform:2,3+parallel2", u23.parallel_extension(0).unwrap().parallel_extension(0).unwrap()),
        entry("uniform:3,3+parallel", Matroid::boolean(3).unwrap().parallel_extension(2).unwrap()),
        entry("uniform:3,4+parallel", u34.parallel_extension(1).unwrap()),
    ]
}

/// The full corpus used by the corpus-wide checks.
pub fn full_corpus() -> Vec<CorpusEntry> {
    let mut out = minor_closed_corpus();
    let mut seen: HashSet<_> = out.iter().map(|e| e.matroid.canonical_key()).collect();
    for e in parallel_extensions() {
        if seen.insert(e.matroid.canonical_key()) {
            out.push(e);
        }
    }
    out
}
