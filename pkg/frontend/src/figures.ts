import { readFileSync, writeFileSync } from 'fs';
import {
  num, parseTable, PROP1_COLUMNS, Row, THM1_COLUMNS, THM2_COLUMNS,
} from './csv.js';
import {
  checkAlphaDecay, checkNonuniformFloor, checkTaylorOrder,
} from './consistency.js';
import { SchemaMismatch } from './errors.js';
import { chart, Series } from './svg.js';

export type FigureKind = 'alpha_decay' | 'taylor_order' | 'nonuniform_floor';

export interface FigureSpec {
  kind: FigureKind;
  csvPath: string;
  /** summary JSON with the eta0 constant; nonuniform_floor only */
  summaryPath?: string;
  outPath: string;
  logX?: boolean;
  logY?: boolean;
}

const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e'];

function alphaDecay(rows: Row[], spec: FigureSpec): string {
  checkAlphaDecay(rows);
  const points = rows
    .map((r): [number, number] => [num(r, 'alpha', 'thm1'), num(r, 'e_alpha', 'thm1')])
    .sort((a, b) => a[0] - b[0]);
  return chart(
    [{ label: 'sup-in-time H^s gap', points, color: PALETTE[0] }],
    {
      title: 'Vanishing-filter error e(alpha)',
      xLabel: 'alpha',
      yLabel: 'e(alpha)',
      logX: spec.logX ?? true,
      logY: spec.logY ?? true,
    },
  );
}

function taylorOrder(rows: Row[], spec: FigureSpec): string {
  checkTaylorOrder(rows);
  const byCase = new Map<string, Array<[number, number]>>();
  for (const row of rows) {
    const key = row.case_id.replace(/-t[0-9.]+$/, '');
    const list = byCase.get(key) ?? [];
    list.push([num(row, 't', 'prop1'), num(row, 'r_t', 'prop1')]);
    byCase.set(key, list);
  }
  const series: Series[] = [...byCase.entries()]
    .sort(([a], [b]) => a.localeCompare(b))
    .map(([label, points], i) => ({
      label,
      points: points.sort((a, b) => a[0] - b[0]),
      color: PALETTE[i % PALETTE.length],
    }));
  const first = series[0].points[0];
  return chart(series, {
    title: 'Short-time expansion residual r(t)',
    xLabel: 't',
    yLabel: 'r(t)',
    logX: spec.logX ?? true,
    logY: spec.logY ?? true,
    slopeGuide: { anchor: [first[0], first[1] * 0.5], slope: 2, label: 'slope 2' },
  });
}

function readEta0(summaryPath: string): number {
  const summary = JSON.parse(readFileSync(summaryPath, 'utf8'));
  const eta0 = summary?.constants?.eta0;
  if (typeof eta0 !== 'number' || !(eta0 >= 0)) {
    throw new SchemaMismatch(`${summaryPath}: missing constants.eta0`);
  }
  return eta0;
}

function nonuniformFloor(rows: Row[], spec: FigureSpec): string {
  if (!spec.summaryPath) {
    throw new SchemaMismatch('nonuniform_floor needs the summary JSON for eta0');
  }
  const eta0 = readEta0(spec.summaryPath);
  checkNonuniformFloor(rows, eta0);
  const main: Array<[number, number]> = [];
  const control: Array<[number, number]> = [];
  for (const row of rows) {
    const p: [number, number] = [num(row, 'n', 'thm2'), num(row, 'd_n', 'thm2')];
    (row.case_id.endsWith('-control') ? control : main).push(p);
  }
  main.sort((a, b) => a[0] - b[0]);
  control.sort((a, b) => a[0] - b[0]);
  const series: Series[] = [
    { label: 'two-scale family d_n', points: main, color: PALETTE[1] },
  ];
  if (control.length > 0) {
    series.push({
      label: 'control (high-frequency part only)',
      points: control,
      color: PALETTE[0],
      dashed: true,
    });
  }
  return chart(series, {
    title: 'Non-uniform convergence floor',
    xLabel: 'sequence index n',
    yLabel: 'd_n',
    logX: spec.logX ?? false,
    logY: spec.logY ?? true,
    hLine: { y: eta0, label: `eta0 = ${eta0.toExponential(3)}` },
  });
}

const REGISTRY: Record<FigureKind, { columns: string[]; build: (rows: Row[], spec: FigureSpec) => string }> = {
  alpha_decay: { columns: THM1_COLUMNS, build: alphaDecay },
  taylor_order: { columns: PROP1_COLUMNS, build: taylorOrder },
  nonuniform_floor: { columns: THM2_COLUMNS, build: nonuniformFloor },
};

/** Render one figure to SVG; returns the output path. */
export function render(spec: FigureSpec): string {
  const entry = REGISTRY[spec.kind];
  if (!entry) throw new SchemaMismatch(`unknown figure kind "${spec.kind}"`);
  const text = readFileSync(spec.csvPath, 'utf8');
  const rows = parseTable(text, entry.columns, spec.csvPath);
  const svg = entry.build(rows, spec);
  writeFileSync(spec.outPath, svg);
  return spec.outPath;
}
