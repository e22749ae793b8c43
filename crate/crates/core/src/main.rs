fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(linepoly::cli::cli_main(&argv));
}
