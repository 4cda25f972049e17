mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use newton_spectrum::corpus::ideal_corpus;
use newton_spectrum::homogeneous::{
    comparison_diagram, default_consistency_bound, diagonal_b_roots, fermat_jumping_coefficients,
    fermat_reduced_b_roots, fermat_spectrum, theorem3_consistency, DiagonalData,
};
use newton_spectrum::io::{
    parse_ideal, spectrum_terms, to_json, ConsistencyJson, DiagramJson, FacetJson, JumpingJson, MultiplierJson,
    PolyhedronJson, SpectrumJson, SpectrumTerms,
};
use newton_spectrum::lattice::all_facet_invariants;
use newton_spectrum::multiplier::{default_box, jumping_coefficients, lct, multiplier_ideal};
use newton_spectrum::oracle::SearchBox;
use newton_spectrum::rational::{self, Rational};
use newton_spectrum::spectrum::{check_ambient_independence_iterated, spectrum_of_ideal};
use newton_spectrum::verify::{verify_all, VerifyParams};
use newton_spectrum::{newton_polyhedron, MonomialIdeal};

#[derive(Parser, Debug)]
#[command(name = "newton-spectrum", version, about = "Exact invariants of monomial ideals")]
struct Cli {
    #[command(flatten)]
    input: InputArgs,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// File holding the ideal as JSON or one exponent vector per line.
    #[arg(long, global = true, conflicts_with = "inline")]
    ideal: Option<PathBuf>,

    /// The ideal itself, in either input form.
    #[arg(long, global = true)]
    inline: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Vertices and facets of the Newton polyhedron.
    Newton,
    /// c and e for every compact facet.
    Facets,
    /// Spectra of the normal-cone components over the origin.
    Spectrum {
        /// Also compare against the one- and two-fold ambient extensions.
        #[arg(long)]
        check_ambient: bool,
    },
    /// Minimal generators of the multiplier ideal J(alpha).
    Multiplier {
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
    },
    /// Jumping coefficients in (0, bound] with witnesses.
    Jumping {
        #[arg(long, value_parser = parse_rational)]
        bound: Rational,
    },
    /// Log-canonical threshold.
    Lct,
    /// Roots of b_f(-s) for f = (x_1^m_1, ..., x_n^m_n).
    Bfunction {
        #[arg(long, value_delimiter = ',', required = true)]
        diagonal: Vec<u64>,
    },
    /// Spectrum, reduced b-roots and jumping coefficients of sum x_i^m_i.
    Fermat {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<u64>,
        #[arg(long)]
        spectrum: bool,
        #[arg(long)]
        broots: bool,
        #[arg(long, value_parser = parse_rational)]
        jumping: Option<Rational>,
    },
    /// The four-set comparison of jumping coefficients and spectral exponents.
    Compare {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<u64>,
    },
    /// Integer-shift checks between spectrum, b-roots and jumping coefficients.
    Consistency {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<u64>,
        /// Defaults to n + 2.
        #[arg(long, value_parser = parse_rational)]
        bound: Option<Rational>,
    },
    /// Run the brute-force oracles against the closed forms, on the given
    /// ideal or on the built-in corpus.
    Verify {
        #[arg(long = "box", default_value_t = 10)]
        box_bound: i64,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, value_parser = parse_rational, default_value = "2")]
        bound: Rational,
    },
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    rational::parse(text).map_err(|e| e.to_string())
}

enum Failure {
    Input(String),
    Verification,
}

impl From<newton_spectrum::Error> for Failure {
    fn from(e: newton_spectrum::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Run = Result<(), Failure>;

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) {
    match format {
        Format::Json => print!("{}", to_json(value)),
        Format::Table => print!("{}", table()),
    }
}

fn read_ideal(input: &InputArgs) -> Result<MonomialIdeal, Failure> {
    let text = match (&input.ideal, &input.inline) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(text)) => text.clone(),
        (None, None) => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let parsed = parse_ideal(&text)?;
    for notice in &parsed.notices {
        eprintln!("notice: {notice}");
    }
    Ok(parsed.ideal)
}

#[derive(Serialize)]
struct SpectrumOut {
    #[serde(flatten)]
    spectrum: SpectrumJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    ambient: Option<AmbientOut>,
}

#[derive(Serialize)]
struct AmbientOut {
    passed: bool,
    depth: usize,
    diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct LctOut {
    lct: String,
}

#[derive(Serialize)]
struct RootsOut {
    m: Vec<u64>,
    roots: Vec<String>,
}

#[derive(Serialize)]
struct FermatOut {
    m: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<SpectrumTerms>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_b_roots: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jumping: Option<FermatJumping>,
}

#[derive(Serialize)]
struct FermatJumping {
    bound: String,
    values: Vec<String>,
}

fn run(cli: Cli) -> Run {
    let format = cli.format;
    match cli.command {
        Command::Newton => {
            let poly = newton_polyhedron(&read_ideal(&cli.input)?);
            let out = PolyhedronJson::new(&poly);
            emit(format, &out, || render::polyhedron(&out));
        }
        Command::Facets => {
            let ideal = read_ideal(&cli.input)?;
            let poly = newton_polyhedron(&ideal);
            let out: Vec<FacetJson> = all_facet_invariants(&ideal, &poly)?.iter().map(FacetJson::new).collect();
            emit(format, &out, || render::facets(&out));
        }
        Command::Spectrum { check_ambient } => {
            let ideal = read_ideal(&cli.input)?;
            let sp = spectrum_of_ideal(&ideal)?;
            let ambient = if check_ambient {
                let a = check_ambient_independence_iterated(&ideal, 2)?;
                Some(AmbientOut {
                    passed: a.passed,
                    depth: a.depth,
                    diagnostics: a.diagnostics,
                })
            } else {
                None
            };
            let failed = ambient.as_ref().is_some_and(|a| !a.passed);
            let out = SpectrumOut {
                spectrum: SpectrumJson::new(&ideal, &sp),
                ambient,
            };
            emit(format, &out, || {
                let mut s = render::spectrum(&out.spectrum);
                if let Some(a) = &out.ambient {
                    s += &format!("ambient independence (depth {}): {}\n", a.depth, render::verdict(a.passed));
                    for d in &a.diagnostics {
                        s += &format!("  {d}\n");
                    }
                }
                s
            });
            if failed {
                return Err(Failure::Verification);
            }
        }
        Command::Multiplier { alpha } => {
            let poly = newton_polyhedron(&read_ideal(&cli.input)?);
            let out = MultiplierJson::new(&multiplier_ideal(&poly, &alpha)?);
            emit(format, &out, || render::multiplier(&out));
        }
        Command::Jumping { bound } => {
            let poly = newton_polyhedron(&read_ideal(&cli.input)?);
            let report = jumping_coefficients(&poly, &bound)?;
            let k = report
                .coefficients
                .iter()
                .flat_map(|c| c.witness.coords().iter().copied())
                .fold(default_box(&poly, &bound)?, i64::max);
            let out = JumpingJson::new(&report, &lct(&poly), k);
            emit(format, &out, || render::jumping(&out));
        }
        Command::Lct => {
            let poly = newton_polyhedron(&read_ideal(&cli.input)?);
            let out = LctOut {
                lct: rational::format(&lct(&poly)),
            };
            emit(format, &out, || format!("lct = {}\n", out.lct));
        }
        Command::Bfunction { diagonal } => {
            let data = DiagonalData::new(diagonal)?;
            let out = RootsOut {
                m: data.m().to_vec(),
                roots: diagonal_b_roots(&data).to_strings(),
            };
            emit(format, &out, || format!("roots of b_f(-s) for m = {data}: {}\n", out.roots.join(", ")));
        }
        Command::Fermat {
            m,
            spectrum,
            broots,
            jumping,
        } => {
            let data = DiagonalData::fermat(m)?;
            let all = !spectrum && !broots && jumping.is_none();
            let out = FermatOut {
                m: data.m().to_vec(),
                spectrum: (all || spectrum)
                    .then(|| fermat_spectrum(&data).map(|s| spectrum_terms(&s)))
                    .transpose()?,
                reduced_b_roots: (all || broots)
                    .then(|| fermat_reduced_b_roots(&data).map(|r| r.to_strings()))
                    .transpose()?,
                jumping: jumping
                    .map(|b| {
                        fermat_jumping_coefficients(&data, &b).map(|r| FermatJumping {
                            bound: rational::format(&b),
                            values: r.to_strings(),
                        })
                    })
                    .transpose()?,
            };
            emit(format, &out, || {
                let mut s = format!("Fermat m = {data}\n");
                if let Some(sp) = &out.spectrum {
                    s += &format!("spectrum: {}\n", render::terms(sp));
                }
                if let Some(r) = &out.reduced_b_roots {
                    s += &format!("reduced b-roots: {}\n", r.join(", "));
                }
                if let Some(j) = &out.jumping {
                    s += &format!("jumping coefficients in (0,{}]: {}\n", j.bound, j.values.join(", "));
                }
                s
            });
        }
        Command::Compare { m } => {
            let data = DiagonalData::fermat(m)?;
            let out = DiagramJson::new(&comparison_diagram(&data)?);
            emit(format, &out, || render::diagram(&out));
        }
        Command::Consistency { m, bound } => {
            let data = DiagonalData::new(m)?;
            let bound = bound.unwrap_or_else(|| default_consistency_bound(&data));
            let out = ConsistencyJson::new(&theorem3_consistency(&data, &bound)?);
            emit(format, &out, || render::consistency(&out));
            if !out.passed {
                return Err(Failure::Verification);
            }
        }
        Command::Verify {
            box_bound,
            kmax,
            bound,
        } => {
            let ideals = if cli.input.ideal.is_some() || cli.input.inline.is_some() {
                vec![("input".to_string(), read_ideal(&cli.input)?)]
            } else {
                ideal_corpus()
            };
            let params = VerifyParams {
                bx: SearchBox::new(box_bound)?,
                k_max: kmax,
                bound,
                t_max: 4,
            };
            let out = verify_all(&ideals, &params)?;
            emit(format, &out, || render::verify(&out));
            if !out.passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
