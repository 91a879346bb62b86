use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mbpoly::Family;
use mbpoly_cli::eval::{
    command_convert, command_expand, command_op, command_projdeg, command_schurdet, CliError,
    OpKind, Output, Session,
};

/// Exact multivariate polynomials in many bases.
///
/// Expressions follow `expr := term (('+'|'-') term)*`, `term := factor
/// ('*' factor)*`, `factor := atom ('^' nat)?`, where an atom is a
/// parenthesized expression, a negation, a rational number, a declared
/// parameter, or a basis element like `m[1,1,2]`, `Y[1,2,2]`, `^K[2,1]`.
/// Output terms are ordered graded-lexicographically.
#[derive(Parser)]
#[command(name = "mbpoly", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand an expression into the monomial basis
    Expand {
        /// Working basis; retargets the shared prefixes x, K, G
        #[arg(long)]
        basis: Option<String>,
        /// Coefficient parameters, e.g. `q,t1,t2`
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        expr: String,
    },
    /// Convert an expression into a target basis
    Convert {
        /// Target basis name
        #[arg(long)]
        to: String,
        /// Working basis; retargets the shared prefixes x, K, G
        #[arg(long)]
        basis: Option<String>,
        /// Coefficient parameters, e.g. `q,t1,t2`
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        expr: String,
    },
    /// Apply an operator to the monomial expansion of an expression
    Op {
        /// Operator: dd (divided difference), pi, pihat, or T
        #[arg(long)]
        op: OpFlag,
        /// Operator index
        #[arg(long)]
        i: usize,
        /// Operator type
        #[arg(long = "type", value_enum, default_value = "A")]
        family: TypeFlag,
        /// Working basis; retargets the shared prefixes x, K, G
        #[arg(long)]
        basis: Option<String>,
        /// Coefficient parameters, e.g. `q,t1,t2`
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        expr: String,
    },
    /// Projective degree of the Schubert variety of a permutation
    ProjDeg {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Permutation, compact (`2143`) or comma-separated (`2,1,4,3`)
        perm: String,
    },
    /// Determinant of a matrix of Schur functions in chosen alphabets
    SchurDet {
        /// Number of ambient variables
        #[arg(long)]
        nvars: usize,
        /// One alphabet per row: variable indices split by `,`, rows by `;`
        #[arg(long)]
        alphabets: String,
        /// One index vector per row: integers split by `,`, rows by `;`
        #[arg(long)]
        indices: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Copy, Clone, ValueEnum)]
enum OpFlag {
    Dd,
    Pi,
    Pihat,
    #[value(name = "T", alias = "t")]
    T,
}

impl From<OpFlag> for OpKind {
    fn from(f: OpFlag) -> OpKind {
        match f {
            OpFlag::Dd => OpKind::Dd,
            OpFlag::Pi => OpKind::Pi,
            OpFlag::Pihat => OpKind::Pihat,
            OpFlag::T => OpKind::HeckeT,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum TypeFlag {
    A,
    B,
    C,
    D,
}

impl From<TypeFlag> for Family {
    fn from(f: TypeFlag) -> Family {
        match f {
            TypeFlag::A => Family::A,
            TypeFlag::B => Family::B,
            TypeFlag::C => Family::C,
            TypeFlag::D => Family::D,
        }
    }
}

fn emit(out: &Output, format: Format) {
    match format {
        Format::Text => println!("{}", out.text),
        Format::Structured => println!("{}", out.json()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Expand {
            basis,
            params,
            format,
            expr,
        } => {
            let session = Session {
                basis,
                to: None,
                params,
            };
            emit(&command_expand(&expr, &session)?, format);
        }
        Cmd::Convert {
            to,
            basis,
            params,
            format,
            expr,
        } => {
            let session = Session {
                basis,
                to: None,
                params,
            };
            emit(&command_convert(&expr, &to, &session)?, format);
        }
        Cmd::Op {
            op,
            i,
            family,
            basis,
            params,
            format,
            expr,
        } => {
            let session = Session {
                basis,
                to: None,
                params,
            };
            emit(
                &command_op(&expr, op.into(), i, family.into(), &session)?,
                format,
            );
        }
        Cmd::ProjDeg { format, perm } => {
            let value = command_projdeg(&perm)?;
            match format {
                Format::Text => println!("{value}"),
                Format::Structured => println!("{}", serde_json::json!({ "value": value })),
            }
        }
        Cmd::SchurDet {
            nvars,
            alphabets,
            indices,
            format,
        } => {
            emit(&command_schurdet(nvars, &alphabets, &indices)?, format);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Engine(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
