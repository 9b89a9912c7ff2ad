use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Member { k: u32 },
    NotMemberUpTo { k_max: u32 },
    Holds { from: u32, to: u32 },
    FailsAt { n: u32 },
}

impl Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member { .. })
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::FailsAt { .. })
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, Verdict::NotMemberUpTo { .. } | Verdict::Holds { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeOutcome<E> {
    pub verdict: Verdict,
    pub witness: Option<E>,
    pub note: Option<String>,
}

impl<E> ProbeOutcome<E> {
    pub fn new(verdict: Verdict, witness: Option<E>) -> Self {
        ProbeOutcome { verdict, witness, note: None }
    }

    pub fn render(&self, f: impl Fn(&E) -> String) -> RenderedOutcome {
        RenderedOutcome { verdict: self.verdict, witness: self.witness.as_ref().map(f), note: self.note.clone() }
    }
}

/// A probe outcome with its witness printed, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderedOutcome {
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}
