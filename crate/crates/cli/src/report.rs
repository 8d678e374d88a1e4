//! JSON and CSV renderings.
//!
//! CSV floats are written with `{:.16e}` (17 significant digits, `.` as the
//! decimal separator regardless of locale) and rows end in `\n`.

use std::fmt::Write;

use discord_core::{DiscordReport, Spectrum};
use serde::{Deserialize, Serialize};

use crate::spec::StateSpec;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub r: [f64; 3],
    pub s: [f64; 3],
    pub c: [f64; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonReport {
    pub label: Option<String>,
    pub params: Params,
    pub spectrum: [f64; 4],
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub discord: f64,
    pub argmax_axis: [f64; 3],
    pub method: String,
}

impl JsonReport {
    pub fn new(spec: &StateSpec, rep: &DiscordReport) -> Self {
        JsonReport {
            label: spec.label.clone(),
            params: Params { r: spec.r, s: spec.s, c: spec.c },
            spectrum: rep.spectrum,
            mutual_info: rep.mutual_info,
            classical_corr: rep.classical_corr,
            discord: rep.discord,
            argmax_axis: rep.argmax_axis.vector().0,
            method: rep.method.tag().to_owned(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report fields are finite");
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from(
            "label,r1,r2,r3,s1,s2,s3,c1,c2,c3,lambda1,lambda2,lambda3,lambda4,\
             mutual_info,classical_corr,discord,z1,z2,z3,method\n",
        );
        let mut fields = vec![csv_text(self.label.as_deref().unwrap_or(""))];
        let p = &self.params;
        let numbers = p.r.iter().chain(&p.s).chain(&p.c).chain(&self.spectrum);
        let tail = [self.mutual_info, self.classical_corr, self.discord];
        fields.extend(numbers.chain(&tail).chain(&self.argmax_axis).map(|&x| float(x)));
        fields.push(self.method.clone());
        out.push_str(&fields.join(","));
        out.push('\n');
        out
    }
}

#[derive(Serialize)]
struct JsonSpectrum<'a> {
    label: &'a Option<String>,
    eigenvalues: [f64; 4],
    /// `eigenvectors[k][i] = [re, im]` of component `i` of the `k`-th vector.
    eigenvectors: [[[f64; 2]; 4]; 4],
}

pub fn spectrum_json(spec: &StateSpec, s: &Spectrum) -> String {
    let doc = JsonSpectrum {
        label: &spec.label,
        eigenvalues: s.values,
        eigenvectors: s.vectors.map(|v| v.map(|z| [z.re, z.im])),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("spectrum is finite");
    out.push('\n');
    out
}

pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = String::from("k,lambda,v1_re,v1_im,v2_re,v2_im,v3_re,v3_im,v4_re,v4_im\n");
    for (k, (lambda, v)) in s.values.iter().zip(&s.vectors).enumerate() {
        write!(out, "{},{}", k + 1, float(*lambda)).unwrap();
        for z in v {
            write!(out, ",{},{}", float(z.re), float(z.im)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// A float with 17 significant digits.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders rows under `header`.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(float).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn csv_text(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}
