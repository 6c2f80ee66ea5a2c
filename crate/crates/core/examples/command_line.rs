//! Drives the command-line front end in-process and prints its reports.

fn main() {
    let weight = r#"{"h":"1","c1":"1","c2":"0","d1":"0","d2":"0"}"#;
    let runs: [&[&str]; 3] = [
        &["toroidal", "bracket", "h(1,0)", "h(-1,0)"],
        &["toroidal", "reducible", "--weight", weight],
        &[
            "toroidal",
            "quotient-char",
            "--weight",
            weight,
            "--depth",
            "3",
        ],
    ];
    for args in runs {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = toroidal::cli::run(args.iter().copied(), &mut out, &mut err);
        println!("$ {}", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        println!("(exit {code}; {})", String::from_utf8_lossy(&err).trim());
    }
}
