"""
Command-line interface of MDMtool. Every subcommand reads and writes files, so the stages can be chained and
checked independently.

Examples:
  mdmtool quantize weights.csv --bits 8 -o tile.json
  mdmtool map tile.json --plan plan.json -o mapped-tile.json
  mdmtool simulate tile.json --r 2.5 --netlist tile.cir -o nf-report.json
  mdmtool fit --tiles 500 --rows 64 --cols 64 --sparsity 0.8 --seed 7 -o fit-report.json
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from MDMtool.Experiments import accuracy_frame, accuracy_proxy, benchmark_frame, calibrate_eta, \
    gen_dnn_like_tile, gen_dnn_like_weights, gen_random_tile, hypothesis_fit, nf_benchmark, write_csv, write_json
from MDMtool.Methods import analytic_nf, dequantize, export_netlist, mdm_map, measured_nf, quantize, \
    stack_groups, verify_theorem1
from MDMtool.VariableClasses import BitTile, CrossbarGeometry, Dataflow, NfReport, NoiseModel, \
    ResistanceParams, SimulationSetup, WeightMatrix
from MDMtool.VariableClasses.BaseClass import BaseClass, DataError
from MDMtool.VariableClasses.WeightDistribution import Empirical, Exponential, HalfNormal, _WeightDistribution

DEFAULT_OUTPUTS = {'quantize': 'tile.json', 'dequantize': 'weights.csv', 'map': 'mapped-tile.json',
                   'nf': 'nf-report.json', 'simulate': 'nf-report.json', 'sparsity': 'sparsity-report.json',
                   'fit': 'fit-report.json', 'benchmark': 'benchmark.csv', 'calibrate': 'eta.json',
                   'accuracy': 'accuracy.csv'}


class UsageError(Exception):
    """
    This Error occurs when the flags of a subcommand cannot be combined.
    """


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting, so every error is reported the same way."""

    def error(self, message: str):
        raise UsageError(message)


class RunConfig(BaseClass):
    """
    Validated configuration of one command-line run.
    """

    __slots__ = 'command', 'geometry', 'params', 'setup', 'sparsity', 'tiles', 'seed', 'mdm', 'eta', 'input', \
        'output'

    def __init__(self, args: argparse.Namespace):
        """

        Parameters
        ----------
        args : argparse.Namespace
            Parsed flags

        Raises
        ------
        ValueError
            When a flag violates the invariants of the class it configures
        """
        self.command: str = args.command
        self.seed: int = args.seed
        self.setup: SimulationSetup = SimulationSetup(threads=args.threads,
                                                      solver=getattr(args, 'solver', None),
                                                      rtol=getattr(args, 'rtol', None))
        self.params: ResistanceParams | None = None
        if hasattr(args, 'r'):
            self.params = ResistanceParams(args.r, args.ron, args.roff, args.vin)
        self.geometry: CrossbarGeometry | None = None
        if getattr(args, 'rows', None) is not None and getattr(args, 'cols', None) is not None:
            self.geometry = CrossbarGeometry(args.rows, args.cols, getattr(args, 'dataflow', None) or 'conventional')
        self.sparsity: float | None = getattr(args, 'sparsity', None)
        if self.sparsity is not None and not 0 <= self.sparsity <= 1:
            raise ValueError(f'The sparsity {self.sparsity} should lie between 0 and 1.')
        self.tiles: int | None = getattr(args, 'tiles', None)
        if self.tiles is not None and self.tiles < 1:
            raise ValueError(f'The number of tiles {self.tiles} should be positive.')
        self.mdm: bool = bool(getattr(args, 'mdm', False))
        self.eta: list | None = getattr(args, 'eta', None)
        self.input: Path | None = Path(args.input) if getattr(args, 'input', None) else None
        self.output: Path = Path(args.output or DEFAULT_OUTPUTS[self.command])


def _add_resistance_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group('resistance parameters')
    group.add_argument('--r', type=float, default=2.5, help='Wire segment resistance [Ohm] (default: 2.5)')
    group.add_argument('--ron', type=float, default=3e5, help='On-resistance [Ohm] (default: 3e5)')
    group.add_argument('--roff', type=float, default=3e6, help='Off-resistance [Ohm], inf for open devices '
                                                               '(default: 3e6)')
    group.add_argument('--vin', type=float, default=1.0, help='Row drive voltage [V] (default: 1)')
    group.add_argument('--solver', choices=SimulationSetup.SOLVERS, help='Mesh solver (default: auto)')
    group.add_argument('--rtol', type=float, help='Relative residual of the mesh solve (default: 1e-10)')


def _add_distribution_flags(parser: argparse.ArgumentParser, default: str = 'halfnormal') -> None:
    group = parser.add_argument_group('weight distribution')
    group.add_argument('--dist', choices=('exponential', 'halfnormal', 'empirical'), default=default,
                       help=f'Distribution of the weight magnitudes (default: {default})')
    group.add_argument('--lambda', dest='lambda_', type=float, default=1., help='Rate of the exponential')
    group.add_argument('--sigma', type=float, default=1., help='Standard deviation of the half-normal')
    group.add_argument('--samples', type=str, help='CSV with the samples of the empirical distribution')


def build_parser() -> argparse.ArgumentParser:
    """
    This function creates the parser with all the subcommands.

    Returns
    -------
    argparse.ArgumentParser
    """
    common = _Parser(add_help=False)
    common.add_argument('--threads', type=int, default=None,
                        help='Number of tiles handled in parallel (default: MDMTOOL_THREADS or 1)')
    common.add_argument('--seed', type=int, default=0, help='Master seed (default: 0)')
    common.add_argument('--output', '-o', type=str, help='Output file')

    parser = _Parser(prog='mdmtool', description='Parasitic-resistance simulator and Manhattan Distance Mapping '
                                                 'for bit-sliced memristive crossbars.',
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    sub = commands.add_parser('quantize', parents=[common], help='Slice a weight matrix into a tile')
    sub.add_argument('input', help='CSV with one row of weights per line')
    sub.add_argument('--bits', type=int, default=8, help='Number of bits per weight (default: 8)')
    sub.add_argument('--significances', type=int, nargs='+', help='Exponents of the bit columns')
    sub.add_argument('--dataflow', choices=[d.value for d in Dataflow], default='conventional')

    sub = commands.add_parser('dequantize', parents=[common], help='Rebuild the weights stored in a tile')
    sub.add_argument('input', help='Tile JSON')
    sub.add_argument('--scale', type=float, help='Scale (default: the scale stored in the tile JSON, else 1)')

    sub = commands.add_parser('map', parents=[common], help='Apply the Manhattan Distance Mapping to a tile')
    sub.add_argument('input', help='Tile JSON')
    sub.add_argument('--dataflow', choices=[d.value for d in Dataflow], help='Force the orientation')
    sub.add_argument('--plan', type=str, default='plan.json', help='Output file of the plan (default: plan.json)')

    for name, text in (('nf', 'Predict the nonideality factor of a tile'),
                       ('simulate', 'Predict and measure the nonideality factor of a tile')):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('input', nargs='?', help='Tile JSON. Without it, a random tile is generated')
        sub.add_argument('--rows', type=int, help='Rows of the random tile')
        sub.add_argument('--cols', type=int, help='Columns of the random tile')
        sub.add_argument('--sparsity', type=float, default=None, help='Sparsity of the random tile (default: 0.8)')
        sub.add_argument('--dataflow', choices=[d.value for d in Dataflow], help='Orientation of the random tile')
        sub.add_argument('--mdm', action='store_true', help='Apply the Manhattan Distance Mapping first')
        _add_resistance_flags(sub)
        if name == 'simulate':
            sub.add_argument('--netlist', type=str, help='Also write a SPICE netlist of the tile')

    sub = commands.add_parser('sparsity', parents=[common], help='Check the bit-level sparsity bound')
    _add_distribution_flags(sub, 'exponential')
    sub.add_argument('--n', type=int, default=10 ** 6, help='Number of samples (default: 1e6)')
    sub.add_argument('--bits', type=int, default=8, help='Number of fractional bits (default: 8)')

    sub = commands.add_parser('fit', parents=[common], help='Fit measured against predicted nonideality')
    sub.add_argument('--tiles', type=int, default=500)
    sub.add_argument('--rows', type=int, default=64)
    sub.add_argument('--cols', type=int, default=64)
    sub.add_argument('--sparsity', type=float, default=0.8)
    sub.add_argument('--scatter', type=str, help='Output file of the scatter (default: scatter.csv next to -o)')
    _add_resistance_flags(sub)

    for name, text, tiles in (('benchmark', 'Compare both dataflows with and without MDM', 100),
                              ('calibrate', 'Calibrate the noise coefficient eta', 10)):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('--tiles', type=int, default=tiles)
        sub.add_argument('--rows', type=int, default=64)
        sub.add_argument('--cols', type=int, default=64)
        sub.add_argument('--bits', type=int, default=8, help='Number of bits per weight (default: 8)')
        _add_distribution_flags(sub)
        _add_resistance_flags(sub)

    sub = commands.add_parser('accuracy', parents=[common], help='Matrix-vector error under noise injection')
    sub.add_argument('--weights', dest='input', type=str, help='Weight CSV (default: sampled weights)')
    sub.add_argument('--rows', type=int, default=64, help='Rows of the sampled weights (default: 64)')
    sub.add_argument('--groups', type=int, default=8, help='Weights per row of the sampled weights (default: 8)')
    sub.add_argument('--bits', type=int, default=8, help='Number of bits per weight (default: 8)')
    sub.add_argument('--eta', type=float, nargs='+', help='Noise coefficient(s) (default: 2e-3)')
    sub.add_argument('--eta-from', type=str, help='Calibration JSON written by the calibrate subcommand')
    sub.add_argument('--indicator', action='store_true', help='Use 1 - eta instead of 1 - eta * distance')
    sub.add_argument('--trials', type=int, default=100)
    _add_distribution_flags(sub)
    return parser


def make_distribution(args: argparse.Namespace) -> _WeightDistribution:
    """
    This function creates the weight distribution selected by the flags.
    """
    if args.dist == 'exponential':
        return Exponential(args.lambda_)
    if args.dist == 'halfnormal':
        return HalfNormal(args.sigma)
    if args.samples is None:
        raise UsageError('--dist empirical needs --samples.')
    return Empirical(WeightMatrix.from_csv(args.samples).magnitudes.ravel())


def _read_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as error:
        raise DataError(f'{path}: line {error.lineno}: {error.msg}')


def cmd_quantize(config: RunConfig, args: argparse.Namespace) -> str:
    weights = WeightMatrix.from_csv(config.input)
    tiles, scale = quantize(weights, args.significances, args.bits, args.dataflow)
    tile = stack_groups(tiles)
    tile.save_json(config.output, scale=scale)
    return f'Wrote a {tile.rows}x{tile.cols} tile with scale {scale:g} to {config.output}.'


def cmd_dequantize(config: RunConfig, args: argparse.Namespace) -> str:
    data = _read_json(config.input)
    scale = args.scale if args.scale is not None else float(data.get('scale', 1.))
    dequantize(BitTile.from_dict(data), scale).to_csv(config.output)
    return f'Wrote the weights to {config.output}.'


def cmd_map(config: RunConfig, args: argparse.Namespace) -> str:
    tile = BitTile.load_json(config.input)
    plan, mapped = mdm_map(tile, args.dataflow)
    plan.save_json(args.plan)
    mapped.save_json(config.output)
    return f'Wrote the plan to {args.plan} and the mapped tile to {config.output}.'


def _load_tile(config: RunConfig, args: argparse.Namespace) -> BitTile:
    if config.input is not None:
        if config.geometry is not None or args.sparsity is not None or args.dataflow is not None:
            raise UsageError('Give either a tile file or --rows/--cols/--sparsity/--dataflow, not both.')
        tile = BitTile.load_json(config.input)
    elif config.geometry is not None:
        if config.mdm:
            raise UsageError('--mdm needs a tile file.')
        sparsity = 0.8 if config.sparsity is None else config.sparsity
        tile = gen_random_tile(config.geometry.rows, config.geometry.cols, sparsity, config.seed, 0,
                               config.geometry.dataflow)
    else:
        raise UsageError('Give a tile file or --rows and --cols.')
    return mdm_map(tile)[1] if config.mdm else tile


def cmd_nf(config: RunConfig, args: argparse.Namespace) -> str:
    tile = _load_tile(config, args)
    measured = measured_nf(tile, config.params, config.setup) if config.command == 'simulate' else None
    report = NfReport(tile.geometry, config.params, analytic_nf(tile, config.params), measured)
    write_json(report.to_dict(), config.output)
    if getattr(args, 'netlist', None):
        export_netlist(tile, config.params, args.netlist)
    return f'Wrote the nonideality report to {config.output}.'


def cmd_sparsity(config: RunConfig, args: argparse.Namespace) -> str:
    report = verify_theorem1(make_distribution(args), args.n, args.bits, config.seed)
    write_json(report.to_dict(), config.output)
    return f'Wrote the sparsity report to {config.output} ({"ok" if report.all_ok else "violated"}).'


def cmd_fit(config: RunConfig, args: argparse.Namespace) -> str:
    report = hypothesis_fit(config.tiles, config.geometry.rows, config.geometry.cols, config.sparsity,
                            config.params, config.seed, config.setup)
    write_json(report.to_dict(), config.output)
    scatter = Path(args.scatter) if args.scatter else config.output.with_name('scatter.csv')
    write_csv(report.scatter(), scatter)
    return f'Wrote the fit to {config.output} and the scatter to {scatter}.'


def _dnn_tiles(config: RunConfig, args: argparse.Namespace) -> list[BitTile]:
    dist = make_distribution(args)
    return [gen_dnn_like_tile(dist, config.geometry.rows, config.geometry.cols, config.seed, index, args.bits)
            for index in range(config.tiles)]


def cmd_benchmark(config: RunConfig, args: argparse.Namespace) -> str:
    rows = nf_benchmark(_dnn_tiles(config, args), config.params, config.setup)
    write_csv(benchmark_frame(rows), config.output)
    return f'Wrote the benchmark to {config.output}.'


def cmd_calibrate(config: RunConfig, args: argparse.Namespace) -> str:
    model = calibrate_eta(_dnn_tiles(config, args), config.params, config.setup)
    write_json(dict(model.to_dict(), tiles=config.tiles, rows=config.geometry.rows, cols=config.geometry.cols),
               config.output)
    return f'Calibrated eta = {model.eta:.4e}, written to {config.output}.'


def cmd_accuracy(config: RunConfig, args: argparse.Namespace) -> str:
    if args.eta is not None and args.eta_from is not None:
        raise UsageError('Give either --eta or --eta-from, not both.')
    if args.eta_from is not None:
        etas = [float(_read_json(Path(args.eta_from))['eta'])]
    else:
        etas = args.eta if args.eta is not None else [NoiseModel().eta]
    if config.input is not None:
        weights = WeightMatrix.from_csv(config.input)
    else:
        weights = gen_dnn_like_weights(make_distribution(args), args.rows, args.groups, config.seed)
    reports = [accuracy_proxy(weights, NoiseModel(eta, not args.indicator), args.trials, config.seed, args.bits,
                              config.setup.threads) for eta in etas]
    write_csv(accuracy_frame(reports), config.output)
    return f'Wrote the accuracy proxy to {config.output}.'


COMMANDS = {'quantize': cmd_quantize, 'dequantize': cmd_dequantize, 'map': cmd_map, 'nf': cmd_nf,
            'simulate': cmd_nf, 'sparsity': cmd_sparsity, 'fit': cmd_fit, 'benchmark': cmd_benchmark,
            'calibrate': cmd_calibrate, 'accuracy': cmd_accuracy}


def _fail(error: Exception, code: int) -> int:
    print(json.dumps({'error': type(error).__name__, 'message': str(error)}), file=sys.stderr)
    return code


def main(argv: list[str] = None) -> int:
    """
    This function runs one subcommand.

    Parameters
    ----------
    argv : list of str
        Command-line arguments without the program name. Defaults to sys.argv[1:]

    Returns
    -------
    int
        0 on success, 1 when the run failed and 2 for invalid flags
    """
    try:
        args = build_parser().parse_args(argv)
        config = RunConfig(args)
        message = COMMANDS[args.command](config, args)
    except UsageError as error:
        return _fail(error, 2)
    except (ValueError, RuntimeError, OSError, KeyError) as error:
        return _fail(error, 1)
    print(message)
    return 0


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
