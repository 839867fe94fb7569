from fuzzy_lattice.cli import main

main()
