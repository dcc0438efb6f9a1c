# Running the package entry point would exit the interpreter during doctest collection.
collect_ignore = ["src/shiftlab/__main__.py"]
