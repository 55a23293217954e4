fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(bdmp_cli::run(&args));
}
