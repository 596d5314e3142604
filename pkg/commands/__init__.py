"""Sub-commands of the command-line front end, one module each with a `setup(subparsers)` hook."""
