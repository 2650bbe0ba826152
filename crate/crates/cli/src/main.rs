fn main() {
    std::process::exit(macfrob::run(std::env::args_os()));
}
