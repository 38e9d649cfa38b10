use serde_json::Value;

use parthom_core::symfunc::SymFunc;

use crate::commands::cell;
use crate::Format;

const BS_HEADER: [&str; 6] = ["n", "S", "a_S", "a'_S", "b_S", "b'_S"];
const BS_KEYS: [&str; 6] = ["n", "S", "a", "a_prime", "b", "b_prime"];

pub fn render(command: &str, v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("json");
            s.push('\n');
            s
        }
        Format::Tsv => to_tsv(&table(command, v)),
        Format::Pretty => pretty(command, v),
    }
}

type Table = (Vec<String>, Vec<Vec<String>>);

fn table(command: &str, v: &Value) -> Table {
    let strings = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let select = |row: &Value, keys: &[&str]| keys.iter().map(|k| cell(&row[*k])).collect::<Vec<_>>();
    match command {
        "alpha" | "beta" if v.get("row").is_some() => (strings(&BS_HEADER), vec![select(&v["row"], &BS_KEYS)]),
        "sf" | "alpha" | "beta" => {
            let rows = v["sf"]["terms"]
                .as_array()
                .map(|ts| ts.iter().map(|t| vec![cell(&t["partition"]), cell(&t["coeff"])]).collect())
                .unwrap_or_default();
            (strings(&["partition", "coeff"]), rows)
        }
        "homology" => {
            let betti = v["homology"]["betti"].as_object().cloned().unwrap_or_default();
            let torsion = &v["homology"]["torsion"];
            let rows = betti
                .iter()
                .map(|(d, b)| {
                    let t = torsion.get(d).map(cell).unwrap_or_else(|| "-".into());
                    vec![d.clone(), cell(b), t]
                })
                .collect();
            (strings(&["degree", "betti", "torsion"]), rows)
        }
        "table" | "euler" | "simsun" | "bi" => {
            let rows = v["rows"].as_array().cloned().unwrap_or_default();
            if v["family"] == "bS" {
                return (strings(&BS_HEADER), rows.iter().map(|r| select(r, &BS_KEYS)).collect());
            }
            let keys: Vec<&str> = ["n", "i", "value"]
                .into_iter()
                .filter(|k| rows.first().is_some_and(|r| r.get(*k).is_some()))
                .collect();
            (strings(&keys), rows.iter().map(|r| select(r, &keys)).collect())
        }
        _ => {
            let rows = ["assertions", "observations"]
                .iter()
                .flat_map(|group| v[*group].as_array().cloned().unwrap_or_default().into_iter().map(move |a| (group, a)))
                .map(|(group, a)| {
                    let verdict = match (a["passed"].as_bool(), *group) {
                        (Some(true), _) => "pass",
                        (_, "assertions") => "FAIL",
                        _ => "no",
                    };
                    vec![group.trim_end_matches('s').to_string(), cell(&a["name"]), verdict.into(), a["witness"].to_string()]
                })
                .collect();
            (strings(&["kind", "name", "verdict", "witness"]), rows)
        }
    }
}

fn to_tsv((header, rows): &Table) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

fn aligned((header, rows): &Table) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |r: &[String]| {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        cells.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

fn pretty(command: &str, v: &Value) -> String {
    match command {
        "sf" | "alpha" | "beta" => {
            let f: Option<SymFunc> = serde_json::from_value(v["sf"].clone()).ok();
            let mut out = match f {
                Some(f) if f.is_zero() => "0\n".to_string(),
                Some(f) => format!("{f}\n"),
                None => String::new(),
            };
            if let Some(d) = v.get("dimension") {
                out.push_str(&format!("dimension {}\n", cell(d)));
            }
            for key in ["schur_positive", "h_positive"] {
                out.push_str(&format!("{key} {}\n", v[key]));
            }
            if let Some(m) = v.get("multiplicities").and_then(Value::as_object) {
                for (k, x) in m {
                    out.push_str(&format!("{k} {}\n", cell(x)));
                }
            }
            if v.get("row").is_some() {
                out.push_str(&aligned(&table(command, v)));
            }
            out
        }
        "homology" => {
            let mut out = format!("{} n={}\n", cell(&v["poset"]), v["n"]);
            for r in table(command, v).1 {
                let torsion = if r[2] == "-" || r[2] == "[]" { String::new() } else { format!(" torsion {}", r[2]) };
                out.push_str(&format!("H~_{} = Z^{}{torsion}\n", r[0], r[1]));
            }
            out.push_str(&format!("mobius {}\n", cell(&v["mobius"])));
            if let Some(f) = v["character"].get("frobenius") {
                if let Ok(f) = serde_json::from_value::<SymFunc>(f.clone()) {
                    out.push_str(&format!("character in degree {}: {f}\n", v["character"]["degree"]));
                }
            }
            out
        }
        "table" | "euler" | "simsun" | "bi" => aligned(&table(command, v)),
        _ => {
            let t = table(command, v);
            let mut out = String::new();
            for r in &t.1 {
                out.push_str(&format!("{:<4} {:<11} {}\n", r[2], r[0], r[1]));
            }
            let failed = t.1.iter().filter(|r| r[2] == "FAIL").count();
            out.push_str(&format!("{} checked, {failed} failed\n", t.1.len()));
            out
        }
    }
}
