import { existsSync, readFileSync, writeFileSync } from 'fs';
import { join } from 'path';
import { describe, expect, it } from 'vitest';
import { EmptyInput, SchemaMismatch, VerdictMismatch } from '../src/errors.js';
import { render } from '../src/figures.js';
import {
  tempDir, THM1_OK, THM2_OK, THM2_SUMMARY_OK, writeInputDir,
} from './fixtures.js';

describe('render alpha_decay', () => {
  it('writes an svg with one marker per row', () => {
    const dir = writeInputDir();
    const out = join(tempDir(), 'alpha_decay.svg');
    render({ kind: 'alpha_decay', csvPath: join(dir, 'thm1.csv'), outPath: out });
    const svg = readFileSync(out, 'utf8');
    expect(svg.startsWith('<svg')).toBe(true);
    expect(svg.match(/<circle/g)).toHaveLength(3);
    expect(svg).toContain('e(alpha)');
  });

  it('hard-errors when the verdict disagrees with the ordering', () => {
    const dir = tempDir();
    // e no longer monotone in alpha, but verdicts still say pass
    const bad = THM1_OK.replace('7e-06', '9e-05');
    writeFileSync(join(dir, 'thm1.csv'), bad);
    expect(() => render({
      kind: 'alpha_decay', csvPath: join(dir, 'thm1.csv'),
      outPath: join(dir, 'out.svg'),
    })).toThrowError(VerdictMismatch);
  });

  it('propagates EmptyInput for header-only csv', () => {
    const dir = tempDir();
    writeFileSync(join(dir, 'thm1.csv'), THM1_OK.split('\n')[0] + '\n');
    expect(() => render({
      kind: 'alpha_decay', csvPath: join(dir, 'thm1.csv'),
      outPath: join(dir, 'out.svg'),
    })).toThrowError(EmptyInput);
  });
});

describe('render taylor_order', () => {
  it('draws the slope-2 guide', () => {
    const dir = writeInputDir();
    const out = join(tempDir(), 'taylor_order.svg');
    render({ kind: 'taylor_order', csvPath: join(dir, 'prop1.csv'), outPath: out });
    const svg = readFileSync(out, 'utf8');
    expect(svg).toContain('slope 2');
    expect(svg.match(/<circle/g)).toHaveLength(4);
  });

  it('rejects a ratio outside the window marked pass', () => {
    const dir = tempDir();
    const bad = [
      'case_id,alpha,t,r_t,ratio,F_value,C_bound,Hs_u0,verdict',
      'alpha0.000000-sine-t0.01250,0.0,0.0125,1.3e-05,,2.0,0.04,1.0,pass',
      'alpha0.000000-sine-t0.02500,0.0,0.025,5.3e-05,9.9,2.0,0.04,1.0,pass',
    ].join('\n') + '\n';
    writeFileSync(join(dir, 'prop1.csv'), bad);
    expect(() => render({
      kind: 'taylor_order', csvPath: join(dir, 'prop1.csv'),
      outPath: join(dir, 'out.svg'),
    })).toThrowError(VerdictMismatch);
  });
});

describe('render nonuniform_floor', () => {
  it('draws the eta0 line and both families', () => {
    const dir = writeInputDir();
    const out = join(tempDir(), 'nonuniform_floor.svg');
    render({
      kind: 'nonuniform_floor', csvPath: join(dir, 'thm2.csv'),
      summaryPath: join(dir, 'thm2.summary.json'), outPath: out,
    });
    const svg = readFileSync(out, 'utf8');
    expect(svg).toContain('eta0 = 2.240e-4');
    expect(svg).toContain('control');
    expect(svg.match(/<circle/g)).toHaveLength(4);
  });

  it('needs the summary json', () => {
    const dir = writeInputDir();
    expect(() => render({
      kind: 'nonuniform_floor', csvPath: join(dir, 'thm2.csv'),
      outPath: join(dir, 'out.svg'),
    })).toThrowError(SchemaMismatch);
  });

  it('rejects a passing row under the floor', () => {
    const dir = tempDir();
    writeFileSync(join(dir, 'thm2.csv'), THM2_OK.replace('1.80e-03', '1.0e-06'));
    writeFileSync(join(dir, 'thm2.summary.json'), THM2_SUMMARY_OK);
    expect(() => render({
      kind: 'nonuniform_floor', csvPath: join(dir, 'thm2.csv'),
      summaryPath: join(dir, 'thm2.summary.json'),
      outPath: join(dir, 'out.svg'),
    })).toThrowError(VerdictMismatch);
  });

  it('reports missing eta0', () => {
    const dir = writeInputDir();
    writeFileSync(join(dir, 'thm2.summary.json'), '{"constants": {}}');
    expect(() => render({
      kind: 'nonuniform_floor', csvPath: join(dir, 'thm2.csv'),
      summaryPath: join(dir, 'thm2.summary.json'),
      outPath: join(dir, 'out.svg'),
    })).toThrowError(SchemaMismatch);
  });
});

describe('render misc', () => {
  it('creates files that exist', () => {
    const dir = writeInputDir();
    const out = join(tempDir(), 'x.svg');
    const path = render({
      kind: 'alpha_decay', csvPath: join(dir, 'thm1.csv'), outPath: out,
    });
    expect(path).toBe(out);
    expect(existsSync(out)).toBe(true);
  });
});
