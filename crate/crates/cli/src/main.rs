//! modlink: linking numbers of modular/Lorenz knots from the command line.
//!
//! Knots are named by Lorenz words, hyperbolic PSL(2, Z) matrices, or
//! indefinite binary quadratic forms; tokens are auto-detected by
//! grammar (word `/[LR]{2,}/`, matrix `"a,b;c,d"`, form `"a,b,c"`).
//!
//! Exit codes: 0 success, 1 assertion/fuzz failure, 2 input parse error,
//! 3 mathematical precondition violation.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use serde::Serialize;

use modular_links::{
    compare_methods, enumerate_canonical_words, kennedy_values, linking_number, oracle_link,
    rs_triples, symmetrized_link, Error, LinkReport, LorenzWord, Psl2Matrix, QuadForm,
};

const USAGE: &str = "\
modlink: exact linking numbers of modular/Lorenz knots

usage:
  modlink word <MATRIX> [--json]
  modlink river <FORM> [--json]
  modlink link <A> <B> [--method rs|oracle|kennedy|all] [--json]
  modlink link --batch <FILE> [--method ...] [--json]
  modlink table3 [--json]
  modlink fuzz --max-len <N> [--kennedy] [--json]

inputs:
  word    letters L and R, length >= 2, aperiodic (e.g. RRLLRL)
  matrix  \"a,b;c,d\" with determinant 1 (e.g. \"3,5;7,12\")
  form    \"a,b,c\" for a x^2 + b xy + c y^2 (e.g. \"7,9,-5\")

exit codes: 0 ok, 1 assertion failure, 2 parse error, 3 precondition violation";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code_for(&e)
        }
    }
}

/// Maps library errors onto the documented exit codes.
fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::Parse(_)
        | Error::InvalidLetter(_)
        | Error::WordTooShort(_)
        | Error::PeriodicWord(_)
        | Error::NotUnimodular(_) => ExitCode::from(2),
        Error::Internal(_) => ExitCode::from(1),
        _ => ExitCode::from(3),
    }
}

fn usage_error(msg: &str) -> Error {
    Error::Parse(format!("{}\n\n{}", msg, USAGE))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Rs,
    Oracle,
    Kennedy,
    All,
}

impl Method {
    fn wants_rs(self) -> bool {
        matches!(self, Method::Rs | Method::All)
    }
    fn wants_oracle(self) -> bool {
        matches!(self, Method::Oracle | Method::All)
    }
    fn wants_kennedy(self) -> bool {
        matches!(self, Method::Kennedy | Method::All)
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method, Error> {
        match s {
            "rs" => Ok(Method::Rs),
            "oracle" => Ok(Method::Oracle),
            "kennedy" => Ok(Method::Kennedy),
            "all" => Ok(Method::All),
            other => Err(usage_error(&format!("unknown method {:?}", other))),
        }
    }
}

struct Options {
    json: bool,
    method: Method,
    max_len: Option<usize>,
    kennedy: bool,
    batch: Option<String>,
    positional: Vec<String>,
}

fn parse_options(args: &[String]) -> Result<Options, Error> {
    let mut opts = Options {
        json: false,
        method: Method::All,
        max_len: None,
        kennedy: false,
        batch: None,
        positional: Vec::new(),
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        let mut take_value = |name: &str| -> Result<String, Error> {
            if let Some(eq) = arg.strip_prefix(&format!("{}=", name)) {
                return Ok(eq.to_string());
            }
            it.next()
                .cloned()
                .ok_or_else(|| usage_error(&format!("{} needs a value", name)))
        };
        if arg == "--json" {
            opts.json = true;
        } else if arg == "--kennedy" {
            opts.kennedy = true;
        } else if arg == "--method" || arg.starts_with("--method=") {
            opts.method = take_value("--method")?.parse()?;
        } else if arg == "--max-len" || arg.starts_with("--max-len=") {
            let raw = take_value("--max-len")?;
            let n: usize = raw
                .parse()
                .map_err(|_| usage_error(&format!("bad --max-len value {:?}", raw)))?;
            opts.max_len = Some(n);
        } else if arg == "--batch" || arg.starts_with("--batch=") {
            opts.batch = Some(take_value("--batch")?);
        } else if arg.starts_with("--") {
            return Err(usage_error(&format!("unknown flag {:?}", arg)));
        } else {
            opts.positional.push(arg.clone());
        }
    }
    Ok(opts)
}

fn run(args: &[String]) -> Result<ExitCode, Error> {
    let Some(command) = args.first() else {
        println!("{}", USAGE);
        return Ok(ExitCode::SUCCESS);
    };
    if command == "help" || command == "--help" || command == "-h" {
        println!("{}", USAGE);
        return Ok(ExitCode::SUCCESS);
    }
    let opts = parse_options(&args[1..])?;
    match command.as_str() {
        "word" => cmd_word(&opts),
        "river" => cmd_river(&opts),
        "link" => cmd_link(&opts),
        "table3" => cmd_table3(&opts),
        "fuzz" => cmd_fuzz(&opts),
        other => Err(usage_error(&format!("unknown subcommand {:?}", other))),
    }
}

/// A knot named in any of the three input representations.
enum Input {
    Word(LorenzWord),
    Matrix(Psl2Matrix),
    Form(QuadForm),
}

fn detect_input(token: &str) -> Result<Input, Error> {
    if token.contains(';') {
        Ok(Input::Matrix(token.parse()?))
    } else if token.chars().all(|c| c == 'L' || c == 'R') && !token.is_empty() {
        Ok(Input::Word(token.parse()?))
    } else if token.contains(',') {
        Ok(Input::Form(token.parse()?))
    } else {
        Err(Error::Parse(format!(
            "token {:?} is not a word, matrix \"a,b;c,d\", or form \"a,b,c\"",
            token
        )))
    }
}

/// Converts any input to a Lorenz word. Matrices must be primitive and
/// hyperbolic; forms must carry a river.
fn input_word(token: &str) -> Result<LorenzWord, Error> {
    match detect_input(token)? {
        Input::Word(w) => Ok(w),
        Input::Matrix(m) => {
            let (word, power) = m.word_and_power()?;
            if power > 1 {
                return Err(Error::NotPrimitive {
                    word: word.to_string(),
                    power,
                });
            }
            Ok(word)
        }
        Input::Form(q) => Ok(q.river_word()?.canonical()),
    }
}

#[derive(Serialize)]
struct WordReport {
    matrix: String,
    word: String,
    k: u32,
    primitive: bool,
    trace: String,
}

fn cmd_word(opts: &Options) -> Result<ExitCode, Error> {
    let [token] = opts.positional.as_slice() else {
        return Err(usage_error("word takes exactly one matrix argument"));
    };
    let matrix: Psl2Matrix = token.parse()?;
    let (word, k) = matrix.word_and_power()?;
    let report = WordReport {
        matrix: matrix.to_string(),
        word: word.to_string(),
        k,
        primitive: k == 1,
        trace: matrix.trace().to_string(),
    };
    if opts.json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("word report serializes")
        );
    } else {
        println!("matrix: {}", report.matrix);
        println!("word: {}", report.word);
        println!("k: {}", report.k);
        println!("primitive: {}", report.primitive);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct RiverReport {
    form: String,
    discriminant: String,
    cf_preperiod: Vec<String>,
    cf_period: Vec<String>,
    river_word: String,
    canonical: String,
}

fn cmd_river(opts: &Options) -> Result<ExitCode, Error> {
    let [token] = opts.positional.as_slice() else {
        return Err(usage_error("river takes exactly one form argument"));
    };
    let form: QuadForm = token.parse()?;
    let word = form.river_word()?;
    let cf = form.cf_expansion()?;
    let report = RiverReport {
        form: form.to_string(),
        discriminant: form.discriminant().to_string(),
        cf_preperiod: cf.preperiod().iter().map(|q| q.to_string()).collect(),
        cf_period: cf.period().iter().map(|q| q.to_string()).collect(),
        river_word: word.to_string(),
        canonical: word.canonical().to_string(),
    };
    if opts.json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("river report serializes")
        );
    } else {
        println!("form: {}", report.form);
        println!("discriminant: {}", report.discriminant);
        println!("cf: {}", cf);
        println!("river word: {}", report.river_word);
        println!("canonical: {}", report.canonical);
    }
    Ok(ExitCode::SUCCESS)
}

/// Builds the full report for one pair, computing Kennedy values only
/// when the method asks for them.
fn link_report(wa: &LorenzWord, wb: &LorenzWord, method: Method) -> Result<LinkReport, Error> {
    if method.wants_kennedy() {
        compare_methods(wa, wb)
    } else {
        let triples = rs_triples(wa, wb);
        let rs_link = linking_number(wa, wb)?;
        let oracle = oracle_link(wa, wb)?;
        let symmetrized = if wa.cyclically_equivalent(&wb.inverse_word()) {
            None
        } else {
            Some(symmetrized_link(wa, wb)?)
        };
        Ok(LinkReport {
            word_a: wa.clone(),
            word_b: wb.clone(),
            triples,
            rs_link,
            oracle_link: oracle,
            kennedy: None,
            symmetrized,
            rs_oracle_agree: rs_link == oracle,
            kennedy_agrees: None,
        })
    }
}

fn print_link_report(report: &LinkReport, method: Method) {
    println!("word_a: {}", report.word_a);
    println!("word_b: {}", report.word_b);
    println!("canonical_a: {}", report.word_a.canonical());
    println!("canonical_b: {}", report.word_b.canonical());
    if method.wants_rs() {
        let mut line = String::new();
        for t in &report.triples {
            let _ = write!(line, " ({},{},{})", t.i, t.j, t.x);
        }
        println!("triples:{}", line);
        println!("rs_link: {}", report.rs_link);
    }
    if method.wants_oracle() {
        println!("oracle_link: {}", report.oracle_link);
    }
    if let Some(kennedy) = &report.kennedy {
        if kennedy.value_den == 1 {
            println!("kennedy: {}", kennedy.value_num);
        } else {
            println!("kennedy: {}/{}", kennedy.value_num, kennedy.value_den);
        }
        println!(
            "kennedy counts: C1={} C2={} C3={}",
            kennedy.c1, kennedy.c2, kennedy.c3
        );
    }
    match report.symmetrized {
        Some(s) => println!("symmetrized: {}", s),
        None => println!("symmetrized: undefined (words are inverse to each other)"),
    }
    if method.wants_rs() && method.wants_oracle() {
        println!("rs/oracle agree: {}", report.rs_oracle_agree);
    }
    if let Some(agrees) = report.kennedy_agrees {
        println!("kennedy agrees: {}", agrees);
    }
}

fn cmd_link(opts: &Options) -> Result<ExitCode, Error> {
    let pairs: Vec<(LorenzWord, LorenzWord)> = if let Some(path) = &opts.batch {
        if !opts.positional.is_empty() {
            return Err(usage_error("link --batch takes no positional arguments"));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read batch file {:?}: {}", path, e)))?;
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 2 {
                return Err(Error::Parse(format!(
                    "batch line {}: expected two tokens, found {}",
                    lineno + 1,
                    tokens.len()
                )));
            }
            pairs.push((input_word(tokens[0])?, input_word(tokens[1])?));
        }
        pairs
    } else {
        let [a, b] = opts.positional.as_slice() else {
            return Err(usage_error(
                "link takes exactly two arguments (or --batch FILE)",
            ));
        };
        vec![(input_word(a)?, input_word(b)?)]
    };

    let mut reports = Vec::with_capacity(pairs.len());
    for (wa, wb) in &pairs {
        reports.push(link_report(wa, wb, opts.method)?);
    }

    if opts.json {
        if opts.batch.is_some() {
            let docs: Vec<String> = reports.iter().map(|r| r.to_json()).collect();
            println!("[{}]", docs.join(","));
        } else {
            println!("{}", reports[0].to_json());
        }
    } else {
        for (idx, report) in reports.iter().enumerate() {
            if idx > 0 {
                println!();
            }
            print_link_report(report, opts.method);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// The four benchmark words and the published magnitude triples
/// (|link|, |link with inverse|, |symmetrized|) for the six pairs.
const TABLE3_WORDS: [(&str, &str); 4] = [
    ("A", "LLR"),
    ("B", "LLLLRLR"),
    ("C", "LLRRLRR"),
    ("D", "LLLLLLLLLRRR"),
];

const TABLE3_ROWS: [(usize, usize, [i64; 3]); 6] = [
    (0, 1, [4, 2, 12]),
    (0, 2, [3, 4, 14]),
    (0, 3, [3, 3, 12]),
    (1, 2, [6, 8, 28]),
    (1, 3, [7, 5, 24]),
    (2, 3, [7, 7, 28]),
];

#[derive(Serialize)]
struct Table3Row {
    pair: String,
    link: i64,
    link_with_inverse: i64,
    symmetrized: i64,
    published: [i64; 3],
    matches: bool,
}

fn table3_rows() -> Result<Vec<Table3Row>, Error> {
    let words: Vec<(String, LorenzWord)> = TABLE3_WORDS
        .iter()
        .map(|(name, text)| {
            (
                name.to_string(),
                LorenzWord::parse(text).expect("table words parse"),
            )
        })
        .collect();
    let mut rows = Vec::with_capacity(TABLE3_ROWS.len());
    for &(x, y, published) in &TABLE3_ROWS {
        let (name_x, wx) = &words[x];
        let (name_y, wy) = &words[y];
        let link = linking_number(wx, wy)?;
        let link_inv = linking_number(wx, &wy.inverse_word())?;
        let sym = symmetrized_link(wx, wy)?;
        let computed = [link, link_inv, sym];
        let matches = computed.iter().all(|v| *v < 0)
            && computed.iter().zip(published.iter()).all(|(c, p)| -c == *p);
        rows.push(Table3Row {
            pair: format!("{},{}", name_x, name_y),
            link,
            link_with_inverse: link_inv,
            symmetrized: sym,
            published,
            matches,
        });
    }
    Ok(rows)
}

fn cmd_table3(opts: &Options) -> Result<ExitCode, Error> {
    let rows = table3_rows()?;
    if opts.json {
        println!(
            "{}",
            serde_json::to_string(&rows).expect("table rows serialize")
        );
    } else {
        for (name, text) in TABLE3_WORDS {
            println!("{} = {}", name, text);
        }
        println!();
        println!("pair  link  inv-link  symmetrized  published  match");
        for row in &rows {
            println!(
                "{:<4} {:>5} {:>9} {:>12}  ({},{},{})  {}",
                row.pair,
                row.link,
                row.link_with_inverse,
                row.symmetrized,
                row.published[0],
                row.published[1],
                row.published[2],
                if row.matches { "yes" } else { "NO" }
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct KennedyCase {
    word_a: String,
    word_b: String,
    value_num: i64,
    value_den: i64,
}

#[derive(Serialize)]
struct FuzzReport {
    max_len: usize,
    words: usize,
    pairs: usize,
    rs_oracle_mismatches: usize,
    sign_violations: usize,
    symmetry_violations: usize,
    kennedy_agreements: Option<usize>,
    kennedy_disagreements: Option<Vec<KennedyCase>>,
}

fn cmd_fuzz(opts: &Options) -> Result<ExitCode, Error> {
    let max_len = opts
        .max_len
        .ok_or_else(|| usage_error("fuzz needs --max-len N"))?;
    if max_len < 2 {
        return Err(usage_error("--max-len must be at least 2"));
    }
    let words = enumerate_canonical_words(max_len);
    let mut pairs = 0usize;
    let mut mismatches = 0usize;
    let mut sign_violations = 0usize;
    let mut symmetry_violations = 0usize;
    let mut agreements = 0usize;
    let mut disagreements: Vec<KennedyCase> = Vec::new();

    for wa in &words {
        for wb in &words {
            if wa == wb {
                continue;
            }
            pairs += 1;
            let rs = linking_number(wa, wb)?;
            let oracle = oracle_link(wa, wb)?;
            if rs != oracle {
                mismatches += 1;
                eprintln!(
                    "rs/oracle mismatch: {} {} rs={} oracle={}",
                    wa, wb, rs, oracle
                );
            }
            if rs > -1 {
                sign_violations += 1;
                eprintln!("sign violation: {} {} rs={}", wa, wb, rs);
            }
            if rs != linking_number(wb, wa)? {
                symmetry_violations += 1;
                eprintln!("symmetry violation: {} {}", wa, wb);
            }
            if opts.kennedy {
                let kennedy = kennedy_values(wa, wb)?;
                if kennedy.equals_integer(rs) {
                    agreements += 1;
                } else {
                    disagreements.push(KennedyCase {
                        word_a: wa.to_string(),
                        word_b: wb.to_string(),
                        value_num: kennedy.value_num,
                        value_den: kennedy.value_den,
                    });
                }
            }
        }
    }

    let failed = mismatches + sign_violations + symmetry_violations > 0;
    let report = FuzzReport {
        max_len,
        words: words.len(),
        pairs,
        rs_oracle_mismatches: mismatches,
        sign_violations,
        symmetry_violations,
        kennedy_agreements: opts.kennedy.then_some(agreements),
        kennedy_disagreements: opts.kennedy.then_some(disagreements),
    };
    if opts.json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("fuzz report serializes")
        );
    } else {
        println!("max_len: {}", report.max_len);
        println!("words: {}", report.words);
        println!("pairs: {}", report.pairs);
        println!("rs/oracle mismatches: {}", report.rs_oracle_mismatches);
        println!("sign violations: {}", report.sign_violations);
        println!("symmetry violations: {}", report.symmetry_violations);
        if opts.kennedy {
            const LISTED: usize = 32;
            let cases = report
                .kennedy_disagreements
                .as_ref()
                .expect("tally present");
            println!("kennedy agreements: {}", agreements);
            println!("kennedy disagreements: {}", cases.len());
            for case in cases.iter().take(LISTED) {
                println!(
                    "kennedy disagreement: {} {} = {}/{}",
                    case.word_a, case.word_b, case.value_num, case.value_den
                );
            }
            if cases.len() > LISTED {
                println!(
                    "... and {} more (use --json for the full list)",
                    cases.len() - LISTED
                );
            }
        }
    }
    if failed {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
