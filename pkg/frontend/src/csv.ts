import Papa from 'papaparse';
import { EmptyInput, SchemaMismatch } from './errors.js';

export type Row = Record<string, string>;

export const THM1_COLUMNS = [
  'case_id', 'alpha', 't_end', 'e_alpha', 'order_p', 'C1', 'verdict',
];
export const PROP1_COLUMNS = [
  'case_id', 'alpha', 't', 'r_t', 'ratio', 'F_value', 'C_bound', 'Hs_u0',
  'verdict',
];
export const THM2_COLUMNS = [
  'case_id', 'n', 'alpha', 't0', 'd_n', 'E_gap_norm', 'taylor_residual',
  'Hs_u0', 'breakdown_margin', 'verdict',
];

/** Parse a result table, enforcing the fixed schema of its subcommand. */
export function parseTable(text: string, required: string[], label: string): Row[] {
  const parsed = Papa.parse<Row>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  const fields = parsed.meta.fields ?? [];
  for (const col of required) {
    if (!fields.includes(col)) {
      throw new SchemaMismatch(`${label}: missing column "${col}"`);
    }
  }
  if (parsed.data.length === 0) {
    throw new EmptyInput(`${label}: header-only table, no data rows`);
  }
  return parsed.data;
}

/** Read a numeric cell; a malformed number is a schema problem. */
export function num(row: Row, col: string, label: string): number {
  const raw = row[col] ?? '';
  // Number('') is 0, so blank cells need their own guard
  const value = raw.trim() === '' ? NaN : Number(raw);
  if (!Number.isFinite(value)) {
    throw new SchemaMismatch(
      `${label}: cell "${raw}" in column "${col}" is not a finite number`,
    );
  }
  return value;
}
