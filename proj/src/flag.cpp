namespace wstrat {}
