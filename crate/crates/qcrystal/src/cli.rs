//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::alphabet::{StrictPartition, Word};
use crate::characters::{character, expand_in_schur_q, format_expansion, Poly};
use crate::crystal::export::{to_dot, to_json, to_text};
use crate::crystal::graph::VERTEX_CAP;
use crate::crystal::{materialize, Category, Crystal, CrystalGraph, Enumerable, StandardCrystal, TensorPower};
use crate::error::ParseError;
use crate::factorization::{Factorization, IncrCrystal};
use crate::insertion::{eg_insert, mixed_insert};
use crate::involutions::Perm;
use crate::tableau::ShTabCrystal;
use crate::verify::{run as run_suite, Params, Suite};
use crate::words::WordCrystal;

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EMPTY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qcrystal", version, about = "Crystals for gl_n, q_n and q⁺_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Materialize a crystal graph.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Print the character of a model.
    Character {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Expand the character of a q⁺ model in the Schur Q basis.
    Expand {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Orthogonal Edelman-Greene or mixed insertion.
    Insert {
        /// Increasing factorization such as "4 | 1'35 | | 4' | | 2".
        #[arg(long, conflicts_with = "word")]
        factorization: Option<String>,
        /// Primed word, inserted letter by letter.
        #[arg(long)]
        word: Option<String>,
        /// Use mixed insertion on the word with this rank.
        #[arg(long, requires = "word")]
        mixed: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Involutions are drawn from S_size.
        #[arg(long, default_value_t = 4)]
        size: usize,
        /// Shapes range over strict partitions inside this one.
        #[arg(long, default_value = "3,2,1")]
        shape: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PolyFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
    pub format: GraphFormat,
    /// Stop after this many vertices.
    #[arg(long, default_value_t = VERTEX_CAP)]
    pub max_vertices: usize,
}

#[derive(Subcommand, Debug)]
pub enum BuildKind {
    /// The standard crystal.
    Standard {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "qplus")]
        cat: String,
    },
    /// A tensor power of the standard crystal, or the component of one element.
    Tensor {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "qplus")]
        cat: String,
        /// Restrict to the component of this word.
        #[arg(long)]
        component: Option<String>,
    },
    /// The crystal of primed words of length m.
    Words {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        unprimed: bool,
        #[arg(long)]
        component: Option<String>,
    },
    /// Increasing factorizations of involution words.
    Incr {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        z: String,
        #[arg(long)]
        unprimed: bool,
    },
    /// Semistandard shifted tableaux.
    Shtab {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        shape: String,
        /// Inner shape for skew tableaux.
        #[arg(long)]
        inner: Option<String>,
        #[arg(long)]
        unprimed: bool,
    },
}

/// Selects one enumerable model for `character` and `expand`.
#[derive(Args, Debug)]
pub struct ModelArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, group = "model")]
    pub shtab: Option<String>,
    #[arg(long, group = "model")]
    pub z: Option<String>,
    /// Primed words of this length.
    #[arg(long, group = "model")]
    pub words: Option<usize>,
    #[arg(long)]
    pub unprimed: bool,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub msg: String,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure {
            code: EXIT_PARSE,
            msg: e.to_string(),
        }
    }
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

fn parse<T: std::str::FromStr<Err = ParseError>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse::<T>()?)
}

fn check_rank(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(fail(EXIT_PARSE, "rank must be positive"));
    }
    Ok(())
}

fn render<E>(g: &CrystalGraph<E>, format: GraphFormat, name: &str) -> String {
    match format {
        GraphFormat::Dot => to_dot(g, name),
        GraphFormat::Json => to_json(g) + "\n",
        GraphFormat::Text => to_text(g),
    }
}

fn graph_of<C: Enumerable>(c: &C, seeds: Option<Vec<C::Elem>>, cap: usize) -> Result<CrystalGraph<C::Elem>, Failure> {
    let seeds = seeds.unwrap_or_else(|| c.elements());
    if seeds.is_empty() {
        return Err(fail(EXIT_EMPTY, "the crystal is empty"));
    }
    materialize(c, &seeds, cap).map_err(|e| fail(EXIT_FAIL, e.to_string()))
}

fn word_seed(s: &Option<String>, c: &impl Crystal<Elem = Word>, n: usize) -> Result<Option<Vec<Word>>, Failure> {
    let Some(s) = s else { return Ok(None) };
    let w: Word = parse(s)?;
    if w.iter().any(|l| l.ceil() < 1 || l.ceil() > n as i64) || (c.category() != Category::QPlus && w != w.unprime()) {
        return Err(fail(EXIT_PARSE, format!("{w} is not an element")));
    }
    Ok(Some(vec![w]))
}

fn build(kind: &BuildKind) -> Result<String, Failure> {
    match kind {
        BuildKind::Standard { common, cat } => {
            check_rank(common.n)?;
            let c = StandardCrystal::new(common.n, parse(cat)?);
            let g = graph_of(&c, None, common.max_vertices)?;
            Ok(render(&g, common.format, "standard"))
        }
        BuildKind::Tensor {
            common,
            m,
            cat,
            component,
        } => {
            check_rank(common.n)?;
            let c = TensorPower::new(StandardCrystal::new(common.n, parse(cat)?), *m);
            let seeds = match component {
                Some(s) => {
                    let w: Word = parse(s)?;
                    if w.len() != *m {
                        return Err(fail(EXIT_PARSE, format!("{w} does not have length {m}")));
                    }
                    Some(vec![w.into_inner()])
                }
                None => None,
            };
            let g = graph_of(&c, seeds, common.max_vertices)?;
            Ok(render(&g, common.format, "tensor"))
        }
        BuildKind::Words {
            common,
            m,
            unprimed,
            component,
        } => {
            check_rank(common.n)?;
            let c = if *unprimed {
                WordCrystal::unprimed(common.n, *m)
            } else {
                WordCrystal::plus(common.n, *m)
            };
            let seeds = word_seed(component, &c, common.n)?;
            if let Some(s) = &seeds {
                if s[0].len() != *m {
                    return Err(fail(EXIT_PARSE, format!("{} does not have length {m}", s[0])));
                }
            }
            let g = graph_of(&c, seeds, common.max_vertices)?;
            Ok(render(&g, common.format, "words"))
        }
        BuildKind::Incr { common, z, unprimed } => {
            check_rank(common.n)?;
            let z: Perm = parse(z)?;
            if !z.is_involution() {
                return Err(fail(EXIT_PARSE, format!("{z} is not an involution")));
            }
            let c = if *unprimed {
                IncrCrystal::unprimed(z, common.n)
            } else {
                IncrCrystal::new(z, common.n)
            };
            if !c.is_nonempty() {
                return Err(fail(
                    EXIT_EMPTY,
                    "the crystal is empty: the shape of z has more than n rows",
                ));
            }
            let g = graph_of(&c, None, common.max_vertices)?;
            Ok(render(&g, common.format, "incr"))
        }
        BuildKind::Shtab {
            common,
            shape,
            inner,
            unprimed,
        } => {
            check_rank(common.n)?;
            let outer: StrictPartition = parse(shape)?;
            let c = match inner {
                Some(i) => {
                    let i: StrictPartition = parse(i)?;
                    if !outer.contained().contains(&i) {
                        return Err(fail(EXIT_PARSE, format!("({i}) is not inside ({outer})")));
                    }
                    ShTabCrystal::skew(outer, i, common.n)
                }
                None if *unprimed => ShTabCrystal::unprimed(outer, common.n),
                None => ShTabCrystal::new(outer, common.n),
            };
            let g = graph_of(&c, None, common.max_vertices)?;
            Ok(render(&g, common.format, "shtab"))
        }
    }
}

fn model_character(m: &ModelArgs) -> Result<(Poly, Category), Failure> {
    check_rank(m.n)?;
    if let Some(s) = &m.shtab {
        let l: StrictPartition = parse(s)?;
        let c = if m.unprimed {
            ShTabCrystal::unprimed(l, m.n)
        } else {
            ShTabCrystal::new(l, m.n)
        };
        return Ok((character(&c), c.category()));
    }
    if let Some(s) = &m.z {
        let z: Perm = parse(s)?;
        if !z.is_involution() {
            return Err(fail(EXIT_PARSE, format!("{z} is not an involution")));
        }
        let c = if m.unprimed {
            IncrCrystal::unprimed(z, m.n)
        } else {
            IncrCrystal::new(z, m.n)
        };
        return Ok((character(&c), c.category()));
    }
    if let Some(k) = m.words {
        let c = if m.unprimed {
            WordCrystal::unprimed(m.n, k)
        } else {
            WordCrystal::plus(m.n, k)
        };
        return Ok((character(&c), c.category()));
    }
    Err(fail(EXIT_PARSE, "one of --shtab, --z or --words is required"))
}

fn insert(factorization: &Option<String>, word: &Option<String>, mixed: Option<usize>) -> Result<String, Failure> {
    let r = match (factorization, word, mixed) {
        (Some(f), None, _) => eg_insert(&parse::<Factorization>(f)?),
        (None, Some(w), None) => {
            let w: Word = parse(w)?;
            eg_insert(&Factorization(w.iter().map(|&l| Word(vec![l])).collect()))
        }
        (None, Some(w), Some(n)) => {
            check_rank(n)?;
            let w: Word = parse(w)?;
            if w.iter().any(|l| l.ceil() < 1 || l.ceil() > n as i64) {
                return Err(fail(EXIT_PARSE, format!("letters of {w} must lie in [1, {n}]")));
            }
            mixed_insert(&w, n)
        }
        _ => return Err(fail(EXIT_PARSE, "one of --factorization or --word is required")),
    };
    let r = r.map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    Ok(format!(
        "P: {}\nQ: {}\n\n{}\n{}",
        r.p,
        r.q,
        r.p.diagram(),
        r.q.diagram()
    ))
}

/// Runs one invocation, writing output to `out`; returns the exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = match &cli.command {
        Command::Build { kind } => build(kind)?,
        Command::Character { model, format } => {
            let (p, _) = model_character(model)?;
            match format {
                PolyFormat::Text => format!("{p}\n"),
                PolyFormat::Json => format!("{}\n", p.to_json()),
            }
        }
        Command::Expand { model } => {
            let (p, cat) = model_character(model)?;
            if cat != Category::QPlus {
                return Err(fail(EXIT_PARSE, "expansion needs a q⁺ model; drop --unprimed"));
            }
            let e = expand_in_schur_q(&p).map_err(|e| fail(EXIT_FAIL, e.to_string()))?;
            format!("{}\n", format_expansion(&e))
        }
        Command::Insert {
            factorization,
            word,
            mixed,
        } => format!("{}\n", insert(factorization, word, *mixed)?),
        Command::Verify {
            suite,
            n,
            m,
            size,
            shape,
        } => {
            let suite: Suite = parse(suite)?;
            let params = Params {
                n: *n,
                m: *m,
                size: *size,
                shape: parse(shape)?,
            };
            let checks = run_suite(suite, &params);
            let mut code = 0;
            for c in &checks {
                writeln!(out, "{c}").map_err(|e| fail(EXIT_FAIL, e.to_string()))?;
                if !c.ok {
                    code = EXIT_FAIL;
                }
            }
            return Ok(code);
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| fail(EXIT_FAIL, e.to_string()))?;
    Ok(0)
}

/// Parses arguments and runs; errors go to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with(
            std::iter::once("qcrystal").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn standard_graph() {
        let (code, s) = run(&["build", "standard", "--n", "2", "--cat", "qplus"]);
        assert_eq!(code, 0);
        assert_eq!(s.lines().filter(|l| l.starts_with('v')).count(), 4);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["build", "standard", "--n", "x"]).0, EXIT_PARSE);
        assert_eq!(run(&["build", "shtab", "--shape", "2,2", "--n", "2"]).0, EXIT_PARSE);
        assert_eq!(run(&["build", "shtab", "--shape", "3,2,1", "--n", "2"]).0, EXIT_EMPTY);
        assert_eq!(run(&["build", "incr", "--z", "(1,3)(2,4)", "--n", "1"]).0, EXIT_EMPTY);
        assert_eq!(run(&["verify", "nope"]).0, EXIT_PARSE);
    }

    #[test]
    fn expand_vexillary() {
        let (code, s) = run(&["expand", "--z", "(1,5)(2,3)", "--n", "5"]);
        assert_eq!((code, s.trim()), (0, "(4,1): 1"));
    }
}
