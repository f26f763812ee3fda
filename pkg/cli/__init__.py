# Singular knot command-line tools
