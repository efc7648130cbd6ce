//! Catalog entries that exercise the generic lemmas on the sequence's own
//! defining recurrence: w[m] = p·w[m-1] + (-q)·w[m-2], i.e. the config
//! x = p, y = -q, alpha = 1, beta = 2, X = Y = w.
//!
//! Each displayed shape (standard, rescaled, and every "set m to collapse
//! the sum" particular) is its own entry, so coverage is per equation.

use super::lemmas::{
    lemma1_closed, lemma1_sum, lemma3_closed, lemma3_sum, lemma5_closed, lemma5_sum,
    Lemma3Variant, Lemma5Variant, LemmaConfig, LemmaForm,
};
use super::{Identity, IndexUse, Indices, ParamConstraint, Skip};
use crate::sequence::Terms;

/// The defining-recurrence config for the w-sequence of `src`.
pub(super) fn defining_cfg(src: &dyn Terms) -> Result<LemmaConfig<'_>, Skip> {
    let p = src.params().p().clone();
    let q = src.params().q().clone();
    LemmaConfig::single(p, -&q, 1, 2, move |i| Ok(src.w(i)?))
}

const ALPHA: i64 = 1;
const BETA: i64 = 2;

/// How an entry derives its summation index m.
#[derive(Clone, Copy)]
enum MSource {
    /// Free m from the instance.
    Free,
    /// Fixed by the particular case: m = at·k + c.
    Pinned { at: i64, c: i64 },
}

impl MSource {
    fn resolve(&self, ix: Indices) -> i64 {
        match *self {
            MSource::Free => ix.m,
            MSource::Pinned { at, c } => at * ix.k + c,
        }
    }

    fn uses(&self) -> IndexUse {
        match self {
            MSource::Free => IndexUse::M_K,
            MSource::Pinned { .. } => IndexUse::K,
        }
    }
}

fn lemma1_entry(
    id: &'static str,
    anchor: &'static str,
    form: LemmaForm,
    m_source: MSource,
) -> Identity {
    Identity {
        id,
        anchor,
        uses: m_source.uses(),
        preconditions: "-",
        constraint: ParamConstraint::Any,
        default_quarantined: false,
        lhs: Box::new(move |src, ix| {
            lemma1_sum(&defining_cfg(src)?, form, m_source.resolve(ix), ix.k)
        }),
        rhs: Box::new(move |src, ix| {
            lemma1_closed(&defining_cfg(src)?, form, m_source.resolve(ix), ix.k)
        }),
        via_lemma: None,
    }
}

fn lemma3_entry(
    id: &'static str,
    anchor: &'static str,
    variant: Lemma3Variant,
    form: LemmaForm,
    m_source: MSource,
) -> Identity {
    Identity {
        id,
        anchor,
        uses: m_source.uses(),
        preconditions: "-",
        constraint: ParamConstraint::Any,
        default_quarantined: false,
        lhs: Box::new(move |src, ix| {
            lemma3_sum(&defining_cfg(src)?, variant, form, m_source.resolve(ix), ix.k)
        }),
        rhs: Box::new(move |src, ix| {
            lemma3_closed(&defining_cfg(src)?, variant, form, m_source.resolve(ix), ix.k)
        }),
        via_lemma: None,
    }
}

fn lemma5_entry(
    id: &'static str,
    anchor: &'static str,
    variant: Lemma5Variant,
    m_source: MSource,
) -> Identity {
    Identity {
        id,
        anchor,
        uses: m_source.uses(),
        preconditions: "-",
        constraint: ParamConstraint::Any,
        default_quarantined: false,
        lhs: Box::new(move |src, ix| {
            lemma5_sum(&defining_cfg(src)?, variant, m_source.resolve(ix), ix.k)
        }),
        rhs: Box::new(move |src, ix| {
            lemma5_closed(&defining_cfg(src)?, variant, m_source.resolve(ix), ix.k)
        }),
        via_lemma: None,
    }
}

pub(super) fn entries() -> Vec<Identity> {
    let free = MSource::Free;
    vec![
        // two-sequence statement specialized to Y = X = w
        lemma1_entry(
            "lemma-2.1",
            "y*sum_{j=0..k} Y_{m-k*al-be+al*j}/x^j = X_m/x^k - x*X_{m-(k+1)al} at x=p, y=-q, al=1, be=2, X=Y=w",
            LemmaForm::Standard,
            free,
        ),
        lemma1_entry(
            "lemma-2.1-particular",
            "y*sum x^(-j)*Y_{al*j} = X_{k*al+be}/x^k - x*X_{be-al} (m pinned to k*al+be)",
            LemmaForm::Standard,
            MSource::Pinned { at: ALPHA, c: BETA },
        ),
        lemma1_entry(
            "eq-t347olg",
            "y*sum_{j=0..k} x^j*Y_{m-be-al*j} = X_m - x^(k+1)*X_{m-(k+1)al}",
            LemmaForm::Rescaled,
            free,
        ),
        lemma1_entry(
            "eq-t347olg-particular",
            "y*sum x^j*Y_{-al*j} = X_be - x^(k+1)*X_{be-(k+1)al} (m pinned to be)",
            LemmaForm::Rescaled,
            MSource::Pinned { at: 0, c: BETA },
        ),
        // single-sequence rearrangements
        lemma3_entry(
            "eq-mxyb9zk",
            "y*sum X_{m-k*al-be+al*j}/x^j = X_m/x^k - x*X_{m-(k+1)al}",
            Lemma3Variant::V1,
            LemmaForm::Standard,
            free,
        ),
        lemma3_entry(
            "eq-cgldajj",
            "x*sum X_{m-k*be-al+be*j}/y^j = X_m/y^k - y*X_{m-(k+1)be}",
            Lemma3Variant::V2,
            LemmaForm::Standard,
            free,
        ),
        lemma3_entry(
            "eq-n2n4ec3",
            "sum X_{m-(be-al)k+al+(be-al)j}/(-y/x)^j = x*X_m/(-y/x)^k + y*X_{m-(k+1)(be-al)}",
            Lemma3Variant::V3,
            LemmaForm::Standard,
            free,
        ),
        lemma3_entry(
            "eq-c522g7v",
            "sum X_{m-(al-be)k+be+(al-be)j}/(-x/y)^j = y*X_m/(-x/y)^k + x*X_{m-(k+1)(al-be)}",
            Lemma3Variant::V4,
            LemmaForm::Standard,
            free,
        ),
        lemma3_entry(
            "eq-mxyb9zk-particular",
            "y*sum X_{al*j}/x^j = X_{k*al+be}/x^k - x*X_{be-al}",
            Lemma3Variant::V1,
            LemmaForm::Standard,
            MSource::Pinned { at: ALPHA, c: BETA },
        ),
        lemma3_entry(
            "eq-cgldajj-particular",
            "x*sum X_{be*j}/y^j = X_{k*be+al}/y^k - y*X_{al-be}",
            Lemma3Variant::V2,
            LemmaForm::Standard,
            MSource::Pinned { at: BETA, c: ALPHA },
        ),
        lemma3_entry(
            "eq-n2n4ec3-particular",
            "sum X_{(be-al)j}/(-y/x)^j = x*X_{(be-al)k-al}/(-y/x)^k + y*X_{-be}",
            Lemma3Variant::V3,
            LemmaForm::Standard,
            MSource::Pinned { at: BETA - ALPHA, c: -ALPHA },
        ),
        lemma3_entry(
            "eq-c522g7v-particular",
            "sum X_{(al-be)j}/(-x/y)^j = y*X_{(al-be)k-be}/(-x/y)^k + x*X_{-al}",
            Lemma3Variant::V4,
            LemmaForm::Standard,
            MSource::Pinned { at: ALPHA - BETA, c: -BETA },
        ),
        lemma3_entry(
            "eq-awbhgnm",
            "y*sum x^j*X_{m-be-al*j} = X_m - x^(k+1)*X_{m-(k+1)al}",
            Lemma3Variant::V1,
            LemmaForm::Rescaled,
            free,
        ),
        lemma3_entry(
            "eq-jjikwds",
            "x*sum y^j*X_{m-al-be*j} = X_m - y^(k+1)*X_{m-(k+1)be}",
            Lemma3Variant::V2,
            LemmaForm::Rescaled,
            free,
        ),
        lemma3_entry(
            "eq-n2n4ec3-equiv",
            "sum X_{m+al-(be-al)j}/(-x/y)^j = x*X_m + y*X_{m-(k+1)(be-al)}/(-x/y)^k",
            Lemma3Variant::V3,
            LemmaForm::Rescaled,
            free,
        ),
        lemma3_entry(
            "eq-c522g7v-equiv",
            "sum X_{m+be-(al-be)j}/(-y/x)^j = y*X_m + x*X_{m-(k+1)(al-be)}/(-y/x)^k",
            Lemma3Variant::V4,
            LemmaForm::Rescaled,
            free,
        ),
        lemma3_entry(
            "eq-awbhgnm-particular",
            "y*sum x^j*X_{-al*j} = X_be - x^(k+1)*X_{be-(k+1)al}",
            Lemma3Variant::V1,
            LemmaForm::Rescaled,
            MSource::Pinned { at: 0, c: BETA },
        ),
        lemma3_entry(
            "eq-jjikwds-particular",
            "x*sum y^j*X_{-be*j} = X_al - y^(k+1)*X_{al-(k+1)be}",
            Lemma3Variant::V2,
            LemmaForm::Rescaled,
            MSource::Pinned { at: 0, c: ALPHA },
        ),
        lemma3_entry(
            "eq-n2n4ec3-equiv-particular",
            "sum X_{(al-be)j}/(-x/y)^j = x*X_{-al} + y*X_{k(al-be)-be}/(-x/y)^k",
            Lemma3Variant::V3,
            LemmaForm::Rescaled,
            MSource::Pinned { at: 0, c: -ALPHA },
        ),
        lemma3_entry(
            "eq-c522g7v-equiv-particular",
            "sum X_{(be-al)j}/(-y/x)^j = y*X_{-be} + x*X_{k(be-al)-al}/(-y/x)^k",
            Lemma3Variant::V4,
            LemmaForm::Rescaled,
            MSource::Pinned { at: 0, c: -BETA },
        ),
        // binomially weighted forms
        lemma5_entry(
            "eq-nrzg4pd",
            "sum C(k,j)*(x/y)^j*X_{m-k*be+(be-al)j} = X_m/y^k",
            Lemma5Variant::B1,
            free,
        ),
        lemma5_entry(
            "eq-h6kcv7w",
            "sum C(k,j)*X_{m+(al-be)k+be*j}/(-y)^j = (-x/y)^k*X_m",
            Lemma5Variant::B2,
            free,
        ),
        lemma5_entry(
            "eq-fnwrzi3",
            "sum C(k,j)*X_{m+(be-al)k+al*j}/(-x)^j = (-y/x)^k*X_m",
            Lemma5Variant::B3,
            free,
        ),
        lemma5_entry(
            "eq-nrzg4pd-swapped",
            "sum C(k,j)*(y/x)^j*X_{m-k*al+(al-be)j} = X_m/x^k",
            Lemma5Variant::B4,
            free,
        ),
        lemma5_entry(
            "eq-nrzg4pd-particular",
            "sum C(k,j)*(x/y)^j*X_{(be-al)j} = X_{k*be}/y^k",
            Lemma5Variant::B1,
            MSource::Pinned { at: BETA, c: 0 },
        ),
        lemma5_entry(
            "eq-h6kcv7w-particular",
            "sum C(k,j)*X_{be*j}/(-y)^j = (-x/y)^k*X_{(be-al)k}",
            Lemma5Variant::B2,
            MSource::Pinned { at: BETA - ALPHA, c: 0 },
        ),
        lemma5_entry(
            "eq-fnwrzi3-particular",
            "sum C(k,j)*X_{al*j}/(-x)^j = (-y/x)^k*X_{(al-be)k}",
            Lemma5Variant::B3,
            MSource::Pinned { at: ALPHA - BETA, c: 0 },
        ),
        lemma5_entry(
            "eq-nrzg4pd-swapped-particular",
            "sum C(k,j)*(y/x)^j*X_{(al-be)j} = X_{k*al}/x^k",
            Lemma5Variant::B4,
            MSource::Pinned { at: ALPHA, c: 0 },
        ),
    ]
}
