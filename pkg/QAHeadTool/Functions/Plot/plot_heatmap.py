from os import makedirs
from os.path import dirname

import matplotlib
from matplotlib.colors import Normalize
from matplotlib.pyplot import close, subplots
from numpy import abs as np_abs, arange, nanmax as np_max

from QAHeadTool.Functions.Plot import COLORMAP, SVG_RC


def get_color_scale(Zdata):
    """Returns the symmetric color scale of a matrix, +/- max|Zdata|"""
    z_max = np_max(np_abs(Zdata))
    if not z_max > 0:
        # Constant zero matrix: every cell gets the middle color
        z_max = 1.0
    return Normalize(vmin=-z_max, vmax=z_max, clip=True)


def get_cell_colors(Zdata, colormap=COLORMAP):
    """Returns the L x H x 4 RGBA color of each heatmap cell"""
    return matplotlib.colormaps[colormap](get_color_scale(Zdata)(Zdata))


def plot_heatmap(
    Zdata,
    save_path,
    colormap=COLORMAP,
    title="",
    xlabel="Head",
    ylabel="Layer",
    zlabel="",
    is_annotated=True,
    font_size_title=12,
    font_size_label=10,
    font_size_annotation=7,
):
    """Plots a layer x head matrix as a standalone SVG heatmap

    The color ramp is linear and symmetric around zero, clipped at
    +/- max|Zdata|: a zero entry always gets the middle color.

    Parameters
    ----------
    Zdata : ndarray
        L x H values
    save_path : str
        full path of the SVG file
    colormap : str
        diverging matplotlib colormap
    title : str
        title of the graph
    xlabel : str
        label for the x-axis
    ylabel : str
        label for the y-axis
    zlabel : str
        label of the colorbar
    is_annotated : bool
        True to print the value in each cell

    Returns
    -------
    save_path : str
        full path of the SVG file
    """
    n_layers, n_heads = Zdata.shape
    norm = get_color_scale(Zdata)
    colors = get_cell_colors(Zdata, colormap)

    if dirname(save_path) != "":
        makedirs(dirname(save_path), exist_ok=True)

    with matplotlib.rc_context(SVG_RC):
        fig, ax = subplots(
            tight_layout=True, figsize=(1.0 + 0.6 * n_heads, 1.0 + 0.5 * n_layers)
        )
        mesh = ax.pcolormesh(
            arange(n_heads + 1),
            arange(n_layers + 1),
            Zdata,
            cmap=colormap,
            norm=norm,
            edgecolors="white",
            linewidth=0.5,
        )
        if is_annotated:
            for layer in range(n_layers):
                for head in range(n_heads):
                    ax.text(
                        head + 0.5,
                        layer + 0.5,
                        format(Zdata[layer, head], ".2g"),
                        ha="center",
                        va="center",
                        fontsize=font_size_annotation,
                        color="white" if colors[layer, head, :3].mean() < 0.5 else "black",
                    )
        ax.set_xticks(arange(n_heads) + 0.5)
        ax.set_xticklabels([str(head) for head in range(n_heads)])
        ax.set_yticks(arange(n_layers) + 0.5)
        ax.set_yticklabels([str(layer) for layer in range(n_layers)])
        ax.invert_yaxis()
        ax.set_xlabel(xlabel, fontsize=font_size_label)
        ax.set_ylabel(ylabel, fontsize=font_size_label)
        ax.set_title(title, fontsize=font_size_title)
        clb = fig.colorbar(mesh, ax=ax, format="%.4g")
        clb.ax.set_title(zlabel, fontsize=font_size_label)
        fig.savefig(save_path, format="svg", metadata={"Date": None})
        close(fig)
    return save_path
