use std::fmt::Write;

use super::CharacterTable;
use crate::fingroup::FiniteGroup;
use crate::format::{format_complex, SIGNIFICANT_DIGITS};

impl CharacterTable {
    /// Tab-separated table: a header row naming classes, then one row per
    /// irrep with values as `a+bi`.
    pub fn to_tsv(&self) -> String {
        let r = self.num_irreps();
        let mut out = String::from("irrep");
        for c in 0..r {
            write!(out, "\tC{c}").unwrap();
        }
        out.push('\n');
        for l in 0..r {
            write!(out, "chi{l}").unwrap();
            for c in 0..r {
                write!(out, "\t{}", format_complex(self.value(l, c), SIGNIFICANT_DIGITS)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Human-readable dump: order, class sizes and representatives, then
    /// dimension, indicator and values of each irrep.
    pub fn to_structured_text(&self, g: &FiniteGroup) -> String {
        let c = self.classes();
        let mut out = String::new();
        writeln!(out, "group {}", g.name()).unwrap();
        writeln!(out, "order {}", g.order()).unwrap();
        writeln!(out, "classes {}", c.num_classes()).unwrap();
        for k in 0..c.num_classes() {
            writeln!(
                out,
                "class {k} size {} rep {}",
                c.class_size(k),
                g.label(c.representative(k))
            )
            .unwrap();
        }
        for l in 0..self.num_irreps() {
            let values: Vec<String> = self
                .character(l)
                .iter()
                .map(|&v| format_complex(v, SIGNIFICANT_DIGITS))
                .collect();
            writeln!(
                out,
                "irrep {l} dim {} fs {:+} values {}",
                self.dim(l),
                self.indicators()[l],
                values.join(" ")
            )
            .unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::build_group;

    #[test]
    fn s3_exports() {
        let g = build_group("S3").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(
            t.to_tsv(),
            "irrep\tC0\tC1\tC2\nchi0\t1\t1\t1\nchi1\t1\t-1\t1\nchi2\t2\t0\t-1\n"
        );
        let text = t.to_structured_text(&g);
        assert!(text.contains("class 1 size 3 rep (2 3)"));
        assert!(text.contains("irrep 2 dim 2 fs +1 values 2 0 -1"));
    }

    #[test]
    fn z3_complex_values() {
        let t = CharacterTable::compute(&build_group("Z3").unwrap()).unwrap();
        assert!(t.to_tsv().contains("-0.5+0.866025403784i"));
    }
}
