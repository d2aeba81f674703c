//! Command-line interface. Exit codes: 0 success, 2 verification did not
//! succeed (failed or marginal), 1 any error.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context};
use cgw_core::catalog::{family_ground, ConfigurationFile, Query, Status};
use cgw_core::config::Configuration;
use cgw_core::derive::{derive_representation, Strategy};
use cgw_core::implications::generate_basis;
use cgw_core::obstruction::detect_obstructions;
use cgw_core::scalar::Scalar;
use cgw_core::sets::canonical_with_permutation;
use cgw_core::tikz::{export_tikz, DEFAULT_WIDTH_CM};
use cgw_core::verify::{verify_by_propositions, verify_full, Verdict};
use clap::{Args, Parser, Subcommand};

use crate::service::{self, DEFAULT_PORT};
use crate::Catalogs;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_VERIFIED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cgw", version, about = "Convex geometries and their circle representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the catalog of all geometries on N elements as JSON lines.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print one catalog record.
    Describe {
        #[arg(long, conflicts_with = "mask", required_unless_present = "mask")]
        id: Option<String>,
        /// Family mask, in any labelling; printed record is its isomorphic catalog member.
        #[arg(long)]
        mask: Option<u64>,
        /// Ground size; inferred from the mask when omitted.
        #[arg(short, requires = "mask")]
        n: Option<usize>,
    },
    /// Check a circle configuration against a catalog geometry.
    Verify {
        #[arg(long)]
        geometry: String,
        #[arg(long)]
        circles: PathBuf,
        #[arg(long)]
        by_propositions: bool,
    },
    /// List geometries ruled out by an obstruction certificate.
    Obstructions {
        #[arg(short)]
        n: usize,
    },
    /// Build a five-element candidate from a four-element configuration.
    Derive {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        target: String,
        /// atom | coatom | double:<label> | nest:<label>
        #[arg(long)]
        strategy: Strategy,
        /// Where to write the candidate (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List catalog ids matching all given filters.
    Search(SearchArgs),
    /// Export a configuration as a TikZ picture.
    Tikz {
        #[arg(long)]
        circles: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WIDTH_CM)]
        width: f64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run the local HTTP service.
    Serve {
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(short)]
    pub n: usize,
    #[arg(long)]
    pub unique_atom: bool,
    #[arg(long)]
    pub unique_coatom: bool,
    #[arg(long)]
    pub cdim: Option<usize>,
    #[arg(long)]
    pub iso_to: Option<u32>,
    #[arg(long)]
    pub status: Option<Status>,
}

fn read_configuration(path: &PathBuf) -> anyhow::Result<Configuration<f64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = ConfigurationFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(file.to_configuration()?)
}

fn print_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> anyhow::Result<i32>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(out, "{e}")?;
            return Ok(EXIT_OK);
        }
        Err(e) => bail!("{}", e.to_string().trim_start_matches("error: ").trim_end()),
    };
    execute(cli.command, out)
}

pub fn execute(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    let catalogs = Catalogs::new();
    let eps = f64::default_eps();
    match command {
        Command::Enumerate { n, output } => {
            let catalog = catalogs.get(n)?;
            let file = fs::File::create(&output).with_context(|| format!("creating {}", output.display()))?;
            let mut w = BufWriter::new(file);
            catalog.write_jsonl(&mut w)?;
            w.flush()?;
            writeln!(out, "wrote {} geometries on {n} elements to {}", catalog.len(), output.display())?;
        }
        Command::Describe { id, mask, n } => {
            let record = match (id, mask) {
                (Some(id), _) => catalogs.record(&id)?,
                (None, Some(mask)) => {
                    let ground = family_ground(mask)?;
                    if let Some(n) = n.filter(|&n| n != ground.len()) {
                        bail!("mask {mask} is a family on {} elements, not {n}", ground.len());
                    }
                    let (record, perm) = catalogs.by_mask(mask)?;
                    if record.family_mask as u64 != mask {
                        eprintln!("mask {mask} is {} relabelled by {perm:?}", record.id);
                    }
                    record
                }
                (None, None) => bail!("give --id or --mask"),
            };
            print_json(out, record)?;
        }
        Command::Verify { geometry, circles, by_propositions } => {
            let record = catalogs.record(&geometry)?;
            let g = record.geometry()?;
            let conf = read_configuration(&circles)?;
            let report = if by_propositions {
                verify_by_propositions(&g, &generate_basis(&g), &conf, eps)?
            } else {
                verify_full(&g, &conf, eps)?
            };
            print_json(out, &report)?;
            if report.verdict != Verdict::Verified {
                return Ok(EXIT_NOT_VERIFIED);
            }
        }
        Command::Obstructions { n } => {
            let catalog = catalogs.get(n)?;
            let mut flagged = 0;
            for r in catalog.records() {
                let certs = detect_obstructions(&r.geometry()?);
                if let Some(first) = certs.first() {
                    flagged += 1;
                    writeln!(out, "{}\tmask={}\tcdim={}\t{}", r.id, r.family_mask, r.cdim, first.describe(catalog.ground()))?;
                }
            }
            writeln!(out, "{flagged} of {} geometries have an obstruction", catalog.len())?;
        }
        Command::Derive { from, target, strategy, output } => {
            let rep4 = read_configuration(&from)?;
            let record = catalogs.record(&target)?;
            let g = record.geometry()?;
            let mut candidate = derive_representation(&rep4, &g, strategy, eps)?;
            // relabel onto the target when the candidate is isomorphic to it
            let induced = candidate.induced_alignment(eps).family;
            let (canon, perm) = canonical_with_permutation(induced, g.ground());
            if canon == g.family() {
                candidate = candidate.relabel(&perm);
            }
            let verdict = verify_full(&g, &candidate, eps)?.verdict;
            let json = ConfigurationFile::from_configuration(&candidate).to_json();
            match output {
                Some(path) => fs::write(&path, json + "\n").with_context(|| format!("writing {}", path.display()))?,
                None => writeln!(out, "{json}")?,
            }
            eprintln!("candidate for {} ({strategy}): {verdict:?}", record.id);
            if verdict != Verdict::Verified {
                return Ok(EXIT_NOT_VERIFIED);
            }
        }
        Command::Search(args) => {
            let query = Query {
                unique_atom: args.unique_atom,
                unique_coatom: args.unique_coatom,
                cdim: args.cdim,
                iso_to: args.iso_to,
                status: args.status,
            };
            for id in catalogs.get(args.n)?.search(&query)? {
                writeln!(out, "{id}")?;
            }
        }
        Command::Tikz { circles, width, output } => {
            if !(width.is_finite() && width > 0.0) {
                bail!("width must be positive, got {width}");
            }
            let conf = read_configuration(&circles)?;
            fs::write(&output, export_tikz(&conf, width)).with_context(|| format!("writing {}", output.display()))?;
        }
        Command::Serve { port } => {
            let runtime = tokio::runtime::Runtime::new()?;
            let catalogs = Arc::new(catalogs.preload()?);
            runtime.block_on(service::serve(catalogs, port))?;
        }
    }
    Ok(EXIT_OK)
}
