fn main() {
    let stdin = std::io::stdin();
    let code = kfree::cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr(),
        &mut stdin.lock(),
    );
    std::process::exit(code);
}
