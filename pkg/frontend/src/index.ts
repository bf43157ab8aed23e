export { render, FigureSpec, FigureKind } from './figures.js';
export { parseTable, num, THM1_COLUMNS, PROP1_COLUMNS, THM2_COLUMNS } from './csv.js';
export {
  FigureError, SchemaMismatch, EmptyInput, VerdictMismatch,
} from './errors.js';
export { run } from './cli.js';
