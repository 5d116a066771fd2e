use clap::ValueEnum;
use girthcolor::GirthValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned human-readable lines.
    Text,
    /// One `key=value` record per line.
    Records,
}

/// Overall result of a command, mapped to the exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Confirmed,
    Indeterminate,
    Refuted,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Confirmed => 0,
            Outcome::Refuted => 1,
            Outcome::Indeterminate => 2,
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Outcome::Confirmed => "confirmed",
            Outcome::Refuted => "refuted",
            Outcome::Indeterminate => "indeterminate",
        }
    }

    /// The worse of two outcomes: a refutation beats indeterminacy.
    pub fn and(self, other: Outcome) -> Outcome {
        self.max(other)
    }
}

/// A flag combination clap cannot reject on its own.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: &str) -> anyhow::Error {
    UsageError(msg.to_string()).into()
}

pub fn show_girth(g: GirthValue) -> String {
    match g {
        GirthValue::Finite(n) => n.to_string(),
        GirthValue::Acyclic => "acyclic".into(),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Out {
    pub format: Format,
}

impl Out {
    /// Prints one fact. Text mode shows the first field as the value and the
    /// rest in parentheses; records mode prints `kind=<label>` and all fields.
    pub fn fact(&self, label: &str, fields: &[(&str, String)]) {
        println!("{}", self.render(label, fields));
    }

    pub fn render(&self, label: &str, fields: &[(&str, String)]) -> String {
        match self.format {
            Format::Records => {
                let mut line = format!("kind={label}");
                for (k, v) in fields {
                    line.push(' ');
                    line.push_str(k);
                    line.push('=');
                    line.push_str(&v.replace(' ', "_"));
                }
                line
            }
            Format::Text => {
                let mut line = format!("{label:<14} ");
                if let Some((_, v)) = fields.first() {
                    line.push_str(v);
                }
                if fields.len() > 1 {
                    let rest: Vec<String> = fields[1..].iter().map(|(k, v)| format!("{k} {v}")).collect();
                    line.push_str(&format!("  ({})", rest.join(", ")));
                }
                line
            }
        }
    }
}
