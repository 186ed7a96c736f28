use std::fmt::Write as _;

use super::eval::{AlphaReport, Payload, QueryResult};
use crate::discount::Type2FuzzySet;
use crate::possibility::FuzzySet;

pub const DEFAULT_PRECISION: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    /// One JSON object per line.
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: OutputFormat,
    pub precision: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            format: OutputFormat::Text,
            precision: DEFAULT_PRECISION,
        }
    }
}

struct Fmt {
    precision: usize,
}

impl Fmt {
    fn num(&self, v: f64) -> String {
        let s = format!("{:.*}", self.precision, v);
        // never print a negative zero
        if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
            s[1..].to_string()
        } else {
            s
        }
    }

    fn opt(&self, v: Option<f64>) -> String {
        v.map_or_else(|| "null".to_string(), |v| self.num(v))
    }

    fn set_text(&self, set: &FuzzySet) -> String {
        set.universe()
            .elements()
            .iter()
            .zip(set.grades())
            .map(|(e, &g)| format!("{e}={}", self.num(g)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn set_json(&self, set: &FuzzySet) -> String {
        let body = set
            .universe()
            .elements()
            .iter()
            .zip(set.grades())
            .map(|(e, &g)| format!("{}:{}", json_str(e), self.num(g)))
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{body}}}")
    }

    fn type2_text(&self, out: &mut String, indent: &str, set: &Type2FuzzySet) {
        for (label, pairs) in set.universe().elements().iter().zip(set.fuzzy_grades()) {
            let body = pairs
                .iter()
                .map(|&(g, m)| format!("{}:{}", self.num(g), self.num(m)))
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(out, "{indent}{label}: {{{body}}}");
        }
    }

    fn type2_json(&self, set: &Type2FuzzySet) -> String {
        let body = set
            .universe()
            .elements()
            .iter()
            .zip(set.fuzzy_grades())
            .map(|(label, pairs)| {
                let pairs = pairs
                    .iter()
                    .map(|&(g, m)| format!("[{},{}]", self.num(g), self.num(m)))
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{}:[{pairs}]", json_str(label))
            })
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{body}}}")
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn alpha_report_text(f: &Fmt, out: &mut String, report: &AlphaReport) {
    out.push_str("alpha-report:\n");
    let adj = &report.adjudication;
    for o in &adj.outcomes {
        let _ = write!(out, "  prop {} priority {}", o.id, o.priority);
        if let Some(c) = o.compatibility {
            let _ = write!(out, " compat {}", f.num(c));
        }
        if let Some(a) = o.alpha {
            let _ = write!(out, " alpha {}", f.num(a));
        }
        let _ = writeln!(out, ": {}", f.set_text(&o.effective));
    }
    for s in &adj.strata {
        let _ = write!(out, "  stratum {} normal {}", s.priority, s.normal);
        if s.preeminent_normal == Some(false) {
            out.push_str(" (preeminent subnormal)");
        }
        let _ = writeln!(out, ": {}", f.set_text(&s.combined));
    }
    for t in &report.type2 {
        let _ = writeln!(out, "  type2 {} cred {}:", t.id, t.granule);
        f.type2_text(out, "    ", &t.distribution);
    }
}

fn alpha_report_json(f: &Fmt, report: &AlphaReport) -> String {
    let adj = &report.adjudication;
    let props = adj
        .outcomes
        .iter()
        .map(|o| {
            format!(
                "{{\"id\":{},\"priority\":{},\"compatibility\":{},\"alpha\":{},\"effective\":{}}}",
                json_str(&o.id),
                o.priority,
                f.opt(o.compatibility),
                f.opt(o.alpha),
                f.set_json(&o.effective)
            )
        })
        .collect::<Vec<_>>()
        .join(",");
    let strata = adj
        .strata
        .iter()
        .map(|s| {
            format!(
                "{{\"priority\":{},\"preeminent_normal\":{},\"normal\":{},\"combined\":{}}}",
                s.priority,
                s.preeminent_normal
                    .map_or_else(|| "null".to_string(), |b| b.to_string()),
                s.normal,
                f.set_json(&s.combined)
            )
        })
        .collect::<Vec<_>>()
        .join(",");
    let type2 = report
        .type2
        .iter()
        .map(|t| {
            format!(
                "{{\"id\":{},\"granule\":{},\"grades\":{}}}",
                json_str(&t.id),
                json_str(&t.granule),
                f.type2_json(&t.distribution)
            )
        })
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "\"propositions\":[{props}],\"strata\":[{strata}],\"combined\":{},\"type2\":[{type2}]",
        f.set_json(&adj.combined)
    )
}

/// Renders results deterministically: fixed-precision numbers, sets in
/// universe order, type-2 grades sorted by grade.
pub fn render(results: &[QueryResult], options: &RenderOptions) -> String {
    let f = Fmt {
        precision: options.precision,
    };
    let mut out = String::new();
    for r in results {
        match options.format {
            OutputFormat::Text => match &r.payload {
                Payload::Poss(v) | Payload::Cert(v) | Payload::Pl(v) | Payload::Bel(v) => {
                    let _ = writeln!(out, "{} = {}", r.query, f.num(*v));
                }
                Payload::Entails(b) => {
                    let _ = writeln!(out, "{} = {b}", r.query);
                }
                Payload::Dist(k) => {
                    let _ = writeln!(out, "dist: {}", f.set_text(k));
                }
                Payload::AlphaReport(report) => alpha_report_text(&f, &mut out, report),
            },
            OutputFormat::Json => {
                let head = format!(
                    "\"query\":{},\"kind\":{}",
                    json_str(&r.query),
                    json_str(r.kind().name())
                );
                let body = match &r.payload {
                    Payload::Poss(v) | Payload::Cert(v) | Payload::Pl(v) | Payload::Bel(v) => {
                        format!("\"value\":{}", f.num(*v))
                    }
                    Payload::Entails(b) => format!("\"value\":{b}"),
                    Payload::Dist(k) => format!("\"value\":{}", f.set_json(k)),
                    Payload::AlphaReport(report) => alpha_report_json(&f, report),
                };
                let _ = writeln!(out, "{{{head},{body}}}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;
    use crate::possibility::Universe;

    fn universe() -> Arc<Universe> {
        Arc::new(Universe::new("X", ["a", "b", "c"]).unwrap())
    }

    fn text(results: &[QueryResult]) -> String {
        render(results, &RenderOptions::default())
    }

    #[test]
    fn scalar_and_dist_formatting() {
        let u = universe();
        let results = vec![
            QueryResult {
                query: "poss B".into(),
                payload: Payload::Poss(0.6),
            },
            QueryResult {
                query: "dist".into(),
                payload: Payload::Dist(FuzzySet::from_grades(&u, vec![0.8, 1.0, 0.8]).unwrap()),
            },
            QueryResult {
                query: "entails B".into(),
                payload: Payload::Entails(false),
            },
        ];
        assert_eq!(
            text(&results),
            "poss B = 0.600000\ndist: a=0.800000 b=1.000000 c=0.800000\nentails B = false\n"
        );
    }

    #[test]
    fn json_lines_parse() {
        let u = universe();
        let results = vec![
            QueryResult {
                query: "cert B".into(),
                payload: Payload::Cert(0.25),
            },
            QueryResult {
                query: "dist".into(),
                payload: Payload::Dist(FuzzySet::from_grades(&u, vec![0.8, 1.0, 0.0]).unwrap()),
            },
        ];
        let out = render(
            &results,
            &RenderOptions {
                format: OutputFormat::Json,
                precision: 3,
            },
        );
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(
            lines[0],
            r#"{"query":"cert B","kind":"cert","value":0.250}"#
        );
        let v: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(v["value"]["a"], 0.8);
    }

    #[test]
    fn negative_zero_is_plain_zero() {
        let f = Fmt { precision: 6 };
        assert_eq!(f.num(-0.0), "0.000000");
        assert_eq!(f.num(-1e-12), "0.000000");
    }

    fn parse_dist_line(line: &str) -> Vec<f64> {
        line.trim_start_matches("dist: ")
            .split(' ')
            .map(|kv| kv.split_once('=').unwrap().1.parse().unwrap())
            .collect()
    }

    proptest! {
        // Rendered values read back to within half a unit in the last place.
        #[test]
        fn rendered_grades_round_trip(grades in prop::collection::vec(0.0f64..=1.0, 3), precision in 1usize..10) {
            let u = universe();
            let set = FuzzySet::from_grades(&u, grades.clone()).unwrap();
            let out = render(
                &[QueryResult { query: "dist".into(), payload: Payload::Dist(set) }],
                &RenderOptions { format: OutputFormat::Text, precision },
            );
            let back = parse_dist_line(out.trim_end());
            let half_ulp = 0.5 * 10f64.powi(-(precision as i32)) + 1e-15;
            for (b, g) in back.iter().zip(&grades) {
                prop_assert!((b - g).abs() <= half_ulp);
            }
        }

        // Distinct values at the configured precision render distinctly.
        #[test]
        fn rendering_is_injective(a in 0u32..=1_000_000, b in 0u32..=1_000_000) {
            let f = Fmt { precision: 6 };
            let (x, y) = (f64::from(a) / 1e6, f64::from(b) / 1e6);
            prop_assert_eq!(a == b, f.num(x) == f.num(y));
        }
    }
}
