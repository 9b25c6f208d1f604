fn main() {
    std::panic::set_hook(Box::new(|info| eprintln!("panic: {info}")));
    std::process::exit(multiplier_cli::run(std::env::args_os()));
}
