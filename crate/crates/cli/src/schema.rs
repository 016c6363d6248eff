//! JSON schemas shipped under `docs/schemas`, checked on load and emit.

use std::sync::OnceLock;

use jsonschema::Validator;
use serde_json::Value;

use crate::envelope::ErrorPayload;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    KnotFile,
    ObstructionReport,
    OrderCertificate,
    IndependenceCertificate,
}

impl Schema {
    pub const ALL: [Schema; 4] = [
        Schema::KnotFile,
        Schema::ObstructionReport,
        Schema::OrderCertificate,
        Schema::IndependenceCertificate,
    ];

    pub fn source(self) -> &'static str {
        match self {
            Schema::KnotFile => include_str!("../../../docs/schemas/knot-file.schema.json"),
            Schema::ObstructionReport => include_str!("../../../docs/schemas/obstruction-report.schema.json"),
            Schema::OrderCertificate => include_str!("../../../docs/schemas/order-certificate.schema.json"),
            Schema::IndependenceCertificate => {
                include_str!("../../../docs/schemas/independence-certificate.schema.json")
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Schema::KnotFile => "KnotFile",
            Schema::ObstructionReport => "ObstructionReport",
            Schema::OrderCertificate => "OrderCertificate",
            Schema::IndependenceCertificate => "IndependenceCertificate",
        }
    }

    fn validator(self) -> &'static Validator {
        static CELLS: [OnceLock<Validator>; 4] = [const { OnceLock::new() }; 4];
        CELLS[self as usize].get_or_init(|| {
            let schema: Value = serde_json::from_str(self.source()).expect("bundled schema is valid JSON");
            jsonschema::validator_for(&schema).expect("bundled schema compiles")
        })
    }

    pub fn validate(self, instance: &Value) -> Result<(), ErrorPayload> {
        let errors: Vec<String> = self
            .validator()
            .iter_errors(instance)
            .map(|e| format!("{} at {}", e, e.instance_path()))
            .collect();
        if errors.is_empty() {
            Ok(())
        } else {
            Err(ErrorPayload::new(
                "schema",
                format!("{} does not match its schema: {}", self.name(), errors.join("; ")),
            ))
        }
    }
}
