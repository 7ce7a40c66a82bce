//! The bundled diagram corpus. Files whose comments name an axis face are annular.

use crate::diagram::{parse_annular_pd, parse_pd, AnnularDiagram, DiagramError, LinkDiagram};

pub const FILES: &[(&str, &str)] = &[
    ("clasp_0", include_str!("../corpus/clasp_0.pd")),
    ("clasp_1", include_str!("../corpus/clasp_1.pd")),
    ("clasp_2", include_str!("../corpus/clasp_2.pd")),
    ("clasp_3", include_str!("../corpus/clasp_3.pd")),
    ("clasp_4", include_str!("../corpus/clasp_4.pd")),
    ("clasp_m1", include_str!("../corpus/clasp_m1.pd")),
    ("clasp_m2", include_str!("../corpus/clasp_m2.pd")),
    ("clasp_m3", include_str!("../corpus/clasp_m3.pd")),
    ("clasp_m4", include_str!("../corpus/clasp_m4.pd")),
    ("core", include_str!("../corpus/core.pd")),
    ("figure_eight", include_str!("../corpus/figure_eight.pd")),
    ("hopf_neg", include_str!("../corpus/hopf_neg.pd")),
    ("hopf_pos", include_str!("../corpus/hopf_pos.pd")),
    ("l7n2", include_str!("../corpus/l7n2.pd")),
    ("sigma_1", include_str!("../corpus/sigma_1.pd")),
    ("sigma_2", include_str!("../corpus/sigma_2.pd")),
    ("sigma_3", include_str!("../corpus/sigma_3.pd")),
    ("sigma_4", include_str!("../corpus/sigma_4.pd")),
    ("sigma_5", include_str!("../corpus/sigma_5.pd")),
    ("sigma_6", include_str!("../corpus/sigma_6.pd")),
    ("trefoil_left", include_str!("../corpus/trefoil_left.pd")),
    ("trefoil_right", include_str!("../corpus/trefoil_right.pd")),
    ("twisted_whitehead_0", include_str!("../corpus/twisted_whitehead_0.pd")),
    ("twisted_whitehead_1", include_str!("../corpus/twisted_whitehead_1.pd")),
    ("twisted_whitehead_2", include_str!("../corpus/twisted_whitehead_2.pd")),
    ("twisted_whitehead_3", include_str!("../corpus/twisted_whitehead_3.pd")),
    ("twisted_whitehead_4", include_str!("../corpus/twisted_whitehead_4.pd")),
    ("twisted_whitehead_5", include_str!("../corpus/twisted_whitehead_5.pd")),
    ("twisted_whitehead_m1", include_str!("../corpus/twisted_whitehead_m1.pd")),
    ("twisted_whitehead_m2", include_str!("../corpus/twisted_whitehead_m2.pd")),
    ("twisted_whitehead_m3", include_str!("../corpus/twisted_whitehead_m3.pd")),
    ("twisted_whitehead_m4", include_str!("../corpus/twisted_whitehead_m4.pd")),
    ("twisted_whitehead_m5", include_str!("../corpus/twisted_whitehead_m5.pd")),
    ("unknot", include_str!("../corpus/unknot.pd")),
    ("unknot_braid", include_str!("../corpus/unknot_braid.pd")),
    ("unknot_kink1", include_str!("../corpus/unknot_kink1.pd")),
    ("unknot_kink2", include_str!("../corpus/unknot_kink2.pd")),
    ("unknot_r2", include_str!("../corpus/unknot_r2.pd")),
    ("unlink2", include_str!("../corpus/unlink2.pd")),
    ("whitehead", include_str!("../corpus/whitehead.pd")),
];

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: &'static str,
    pub link: LinkDiagram,
    pub annular: Option<AnnularDiagram>,
}

pub fn load(text: &str) -> Result<(LinkDiagram, Option<AnnularDiagram>), DiagramError> {
    if text.lines().any(|l| l.trim_start().starts_with("# axis")) {
        let a = parse_annular_pd(text)?;
        Ok((a.base().clone(), Some(a)))
    } else {
        Ok((parse_pd(text)?, None))
    }
}

/// Every corpus diagram, in file-name order.
pub fn entries() -> Vec<Entry> {
    FILES
        .iter()
        .map(|&(name, text)| {
            let (link, annular) = load(text).expect("bundled corpus file");
            Entry { name, link, annular }
        })
        .collect()
}

pub fn get(name: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.name == name)
}
