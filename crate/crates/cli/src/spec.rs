//! The JobSpec JSON schema. Every object rejects unknown fields; the
//! documented form lives in `docs/jobspec.md`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldChoice {
    #[default]
    Rational,
    RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default)]
    pub field: FieldChoice,
    pub presentation: PresentationSpec,
    /// Name to `generator -> value` table. Unlisted generators take their
    /// counit value.
    #[serde(default)]
    pub characters: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub pairs: BTreeMap<String, PairSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub coalgebras: BTreeMap<String, CoalgebraSpec>,
    pub tasks: Vec<TaskSpec>,
}

/// Exactly one of `builtin` and `inline`.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inline: Option<InlinePresentation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InlinePresentation {
    #[serde(default)]
    pub name: Option<String>,
    /// In declaration order; later generators sort after earlier ones.
    pub generators: Vec<GeneratorSpec>,
    /// Each relation `p = 0` is oriented toward its largest word.
    #[serde(default)]
    pub relations: Vec<String>,
    pub coproduct: BTreeMap<String, String>,
    pub counit: BTreeMap<String, String>,
    pub antipode: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inverse: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Name(String),
    Weighted { name: String, weight: i64 },
}

impl GeneratorSpec {
    pub fn name(&self) -> &str {
        match self {
            GeneratorSpec::Name(n) | GeneratorSpec::Weighted { name: n, .. } => n,
        }
    }

    pub fn weight(&self) -> i64 {
        match self {
            GeneratorSpec::Name(_) => 1,
            GeneratorSpec::Weighted { weight, .. } => *weight,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    /// A character name, or `counit`.
    pub delta: String,
    #[serde(default = "one")]
    pub sigma: String,
}

fn one() -> String {
    "1".into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(tag = "from", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// Matrices per generator (unlisted generators act by zero) and an
    /// `H`-valued coaction table; the coaction defaults to `v ↦ 1 ⊗ v`.
    Table {
        dim: usize,
        action_side: SideSpec,
        coaction_side: SideSpec,
        #[serde(default)]
        action: BTreeMap<String, Vec<Vec<String>>>,
        #[serde(default)]
        coaction: Option<Vec<Vec<String>>>,
    },
    /// `^σk_δ`, right-left, unchecked.
    Pair { pair: String },
    /// `^σk_δ` after the modular-pair and SAYD checks.
    Sayd { pair: String },
    /// `H` on itself by left multiplication, in the normal-word basis.
    LeftRegular,
    /// `H` on itself by `h ▷ a = h(1) a S(h(2))`.
    Adjoint,
    /// `H` coacting on itself on the right by `Δ`.
    Coproduct,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(tag = "from", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AlgebraSpec {
    /// Structure constants; entries of `mult` are linear expressions in the
    /// basis labels.
    Table { basis: Vec<String>, unit: String, mult: Vec<Vec<String>> },
    /// `H` itself in its normal-word basis.
    Regular,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(tag = "from", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CoalgebraSpec {
    /// `coproduct[i]` is a degree-2 tensor expression in the basis labels.
    Table { basis: Vec<String>, counit: Vec<String>, coproduct: Vec<String> },
    Regular,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InstanceSpec {
    Cm { pair: String },
    TypeA { algebra: String, action: String, coefficients: String },
    TypeB { algebra: String, coaction: String, coefficients: String },
    TypeC { coalgebra: String, action: String, coefficients: String },
    Twisted { algebra: String, action: String, sigma: String },
    Plain { algebra: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeSpec {
    #[serde(default)]
    pub max_index: Option<u32>,
    #[serde(default)]
    pub random_monomials: Option<usize>,
    #[serde(default)]
    pub max_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationSpec {
    #[serde(default)]
    pub builtin: Option<String>,
    #[serde(default)]
    pub group: Option<GroupSpec>,
    /// Element labels of the two subgroups.
    #[serde(default)]
    pub left: Vec<String>,
    #[serde(default)]
    pub right: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub cyclic: Option<usize>,
    #[serde(default)]
    pub symmetric: Option<usize>,
    /// Labels and a multiplication table of labels; the identity comes first.
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub table: Option<Vec<Vec<String>>>,
}

/// An algebra `A` by generators and relations, with `H` acting on
/// generators: `action[h][a]` is `h ▷ a` as an expression in `A`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleAlgebraSpec {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    pub action: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoactionChoice {
    CoConjugation,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(tag = "task", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TaskSpec {
    CheckHopf {
        #[serde(default)]
        label: Option<String>,
        #[serde(default)]
        probes: Option<ProbeSpec>,
        /// Defaults to true for finite-dimensional presentations.
        #[serde(default)]
        exhaustive: Option<bool>,
    },
    CheckMpi {
        #[serde(default)]
        label: Option<String>,
        pair: String,
        #[serde(default)]
        max_index: Option<u32>,
    },
    CheckSayd {
        #[serde(default)]
        label: Option<String>,
        module: String,
        #[serde(default)]
        bound: Option<u32>,
        /// Require the anti-Yetter–Drinfeld condition only.
        #[serde(default)]
        skip_stability: bool,
    },
    VerifyCocyclic {
        #[serde(default)]
        label: Option<String>,
        instance: InstanceSpec,
        levels: usize,
        /// Probes per level when the instance is not finite-dimensional.
        #[serde(default)]
        samples: Option<usize>,
    },
    CertifyCocycle {
        #[serde(default)]
        label: Option<String>,
        pair: String,
        level: usize,
        candidate: String,
    },
    Cohomology {
        #[serde(default)]
        label: Option<String>,
        instance: InstanceSpec,
        max_degree: usize,
    },
    CharMap {
        #[serde(default)]
        label: Option<String>,
        algebra: String,
        action: String,
        trace: Vec<String>,
        pair: String,
        levels: usize,
    },
    BuildBicrossed {
        #[serde(default)]
        label: Option<String>,
        factorization: FactorizationSpec,
    },
    CrossedProduct {
        #[serde(default)]
        label: Option<String>,
        #[serde(default)]
        algebra: Option<ModuleAlgebraSpec>,
        #[serde(default)]
        coaction: Option<CoactionChoice>,
    },
}

impl TaskSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            TaskSpec::CheckHopf { .. } => "check-hopf",
            TaskSpec::CheckMpi { .. } => "check-mpi",
            TaskSpec::CheckSayd { .. } => "check-sayd",
            TaskSpec::VerifyCocyclic { .. } => "verify-cocyclic",
            TaskSpec::CertifyCocycle { .. } => "certify-cocycle",
            TaskSpec::Cohomology { .. } => "cohomology",
            TaskSpec::CharMap { .. } => "char-map",
            TaskSpec::BuildBicrossed { .. } => "build-bicrossed",
            TaskSpec::CrossedProduct { .. } => "crossed-product",
        }
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            TaskSpec::CheckHopf { label, .. }
            | TaskSpec::CheckMpi { label, .. }
            | TaskSpec::CheckSayd { label, .. }
            | TaskSpec::VerifyCocyclic { label, .. }
            | TaskSpec::CertifyCocycle { label, .. }
            | TaskSpec::Cohomology { label, .. }
            | TaskSpec::CharMap { label, .. }
            | TaskSpec::BuildBicrossed { label, .. }
            | TaskSpec::CrossedProduct { label, .. } => label.as_deref(),
        }
    }
}
