fn main() {
    std::process::exit(rls_cli::run_command(std::env::args_os()));
}
