import { describe, expect, it } from 'vitest';
import { num, parseTable, THM1_COLUMNS } from '../src/csv.js';
import { EmptyInput, SchemaMismatch } from '../src/errors.js';
import { THM1_OK } from './fixtures.js';

describe('parseTable', () => {
  it('parses a well-formed table', () => {
    const rows = parseTable(THM1_OK, THM1_COLUMNS, 'thm1');
    expect(rows).toHaveLength(3);
    expect(rows[0].case_id).toBe('alpha0.125000');
    expect(rows[2].order_p).toBe('');
  });

  it('names the missing column', () => {
    const broken = THM1_OK.replace('e_alpha', 'error');
    expect(() => parseTable(broken, THM1_COLUMNS, 'thm1'))
      .toThrowError(SchemaMismatch);
    expect(() => parseTable(broken, THM1_COLUMNS, 'thm1'))
      .toThrowError(/missing column "e_alpha"/);
  });

  it('rejects a header-only table', () => {
    const headerOnly = THM1_OK.split('\n')[0] + '\n';
    expect(() => parseTable(headerOnly, THM1_COLUMNS, 'thm1'))
      .toThrowError(EmptyInput);
  });
});

describe('num', () => {
  it('reads numeric cells', () => {
    const rows = parseTable(THM1_OK, THM1_COLUMNS, 'thm1');
    expect(num(rows[0], 'alpha', 'thm1')).toBeCloseTo(0.125);
    expect(num(rows[0], 'e_alpha', 'thm1')).toBeCloseTo(7e-6);
  });

  it('flags non-numeric cells', () => {
    const rows = parseTable(THM1_OK, THM1_COLUMNS, 'thm1');
    expect(() => num(rows[0], 'case_id', 'thm1')).toThrowError(SchemaMismatch);
    expect(() => num(rows[2], 'order_p', 'thm1')).toThrowError(SchemaMismatch);
  });
});
