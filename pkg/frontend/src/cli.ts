#!/usr/bin/env node
import { mkdirSync } from 'fs';
import { join } from 'path';
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';
import { FigureError } from './errors.js';
import { FigureKind, render } from './figures.js';

const FIGURES: Array<{ kind: FigureKind; csv: string; summary?: string; out: string }> = [
  { kind: 'alpha_decay', csv: 'thm1.csv', out: 'alpha_decay.svg' },
  { kind: 'taylor_order', csv: 'prop1.csv', out: 'taylor_order.svg' },
  {
    kind: 'nonuniform_floor', csv: 'thm2.csv',
    summary: 'thm2.summary.json', out: 'nonuniform_floor.svg',
  },
];

export function run(argv: string[]): number {
  let args: { in: string; out: string };
  try {
    args = yargs(argv)
      .scriptName('figures')
      .usage('$0 --in DIR --out DIR')
      .option('in', { type: 'string', demandOption: true, describe: 'directory with the CSV tables' })
      .option('out', { type: 'string', demandOption: true, describe: 'directory for the SVG files' })
      .strict()
      .exitProcess(false)
      .parseSync();
  } catch (err) {
    // yargs throws instead of exiting; usage problems exit 2 like the
    // solver CLI does
    if (err instanceof Error) {
      console.error(`figures: ${err.message}`);
      return 2;
    }
    throw err;
  }

  try {
    mkdirSync(args.out, { recursive: true });
    for (const fig of FIGURES) {
      const path = render({
        kind: fig.kind,
        csvPath: join(args.in, fig.csv),
        summaryPath: fig.summary ? join(args.in, fig.summary) : undefined,
        outPath: join(args.out, fig.out),
      });
      console.log(`${fig.kind} -> ${path}`);
    }
  } catch (err) {
    if (err instanceof FigureError) {
      console.error(`figures: ${err.constructor.name}: ${err.message}`);
      return 65;
    }
    if (err instanceof Error && 'code' in err) {
      console.error(`figures: ${err.message}`);
      return 66;
    }
    throw err;
  }
  return 0;
}

const entry = process.argv[1] ?? '';
if (entry.endsWith('cli.js') || entry.endsWith('figures')) {
  process.exit(run(hideBin(process.argv)));
}
