fn main() {
    let (out, code) = polya_cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
