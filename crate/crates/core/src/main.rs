fn main() { core_probe::probe(); }
