# Diverging colormap: negative deltas red, positive deltas blue
COLORMAP = "RdBu"

# rcParams that make the SVG output byte-identical between runs
SVG_RC = {"svg.hashsalt": "qaheadtool", "svg.fonttype": "none"}
