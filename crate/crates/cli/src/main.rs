fn main() {
    std::process::exit(twglue_cli::run(std::env::args_os()));
}
