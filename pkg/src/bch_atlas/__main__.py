from bch_atlas.cli import main

main()
