import { num, Row } from './csv.js';
import { VerdictMismatch } from './errors.js';

/**
 * Re-assert the orderings the tables claim to certify.  The figure code
 * does no numerics of its own, so a disagreement between the data and
 * the verdict column means schema drift upstream and is a hard error.
 */

export function checkAlphaDecay(rows: Row[]): void {
  const sorted = [...rows].sort(
    (a, b) => num(a, 'alpha', 'thm1') - num(b, 'alpha', 'thm1'),
  );
  const errs = sorted.map((r) => num(r, 'e_alpha', 'thm1'));
  let monotone = true;
  for (let i = 1; i < errs.length; i++) {
    if (!(errs[i] > errs[i - 1])) monotone = false;
  }
  const verdicts = new Set(rows.map((r) => r.verdict));
  if (verdicts.size > 1) {
    throw new VerdictMismatch('thm1: rows carry conflicting verdicts');
  }
  const allPass = verdicts.has('pass');
  if (monotone !== allPass) {
    throw new VerdictMismatch(
      `thm1: e(alpha) monotonicity is ${monotone} but the verdict column says ${
        allPass ? 'pass' : 'fail'}`,
    );
  }
}

export function checkTaylorOrder(rows: Row[]): void {
  const byCase = new Map<string, Row[]>();
  for (const row of rows) {
    const key = row.case_id.replace(/-t[0-9.]+$/, '');
    const list = byCase.get(key) ?? [];
    list.push(row);
    byCase.set(key, list);
  }
  for (const [key, caseRows] of byCase) {
    const ratios = caseRows
      .filter((r) => r.ratio !== '')
      .map((r) => num(r, 'ratio', 'prop1'));
    const inWindow = ratios.every((q) => q >= 3.2 && q <= 4.8);
    const verdicts = new Set(caseRows.map((r) => r.verdict));
    if (verdicts.size > 1) {
      throw new VerdictMismatch(`prop1: case ${key} carries conflicting verdicts`);
    }
    const pass = verdicts.has('pass');
    if (inWindow !== pass) {
      throw new VerdictMismatch(
        `prop1: case ${key} has ratios ${inWindow ? 'inside' : 'outside'} ` +
        `[3.2, 4.8] but verdict ${pass ? 'pass' : 'fail'}`,
      );
    }
  }
}

export function checkNonuniformFloor(rows: Row[], eta0: number): void {
  for (const row of rows) {
    if (row.case_id.endsWith('-control')) continue;
    const d = num(row, 'd_n', 'thm2');
    if (row.verdict === 'pass' && d < eta0) {
      throw new VerdictMismatch(
        `thm2: row ${row.case_id} passes but d_n=${d} sits under eta0=${eta0}`,
      );
    }
  }
}
