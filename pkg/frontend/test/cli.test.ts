import { existsSync, readFileSync, writeFileSync } from 'fs';
import { join } from 'path';
import { describe, expect, it, vi } from 'vitest';
import { run } from '../src/cli.js';
import { tempDir, THM1_OK, writeInputDir } from './fixtures.js';

describe('figures cli', () => {
  it('renders all three figures from a consistent bundle', () => {
    const inDir = writeInputDir();
    const outDir = tempDir();
    const log = vi.spyOn(console, 'log').mockImplementation(() => {});
    try {
      expect(run(['--in', inDir, '--out', outDir])).toBe(0);
      expect(log).toHaveBeenCalledTimes(3);
    } finally {
      log.mockRestore();
    }
    for (const name of ['alpha_decay.svg', 'taylor_order.svg', 'nonuniform_floor.svg']) {
      const path = join(outDir, name);
      expect(existsSync(path)).toBe(true);
      expect(readFileSync(path, 'utf8').startsWith('<svg')).toBe(true);
    }
  });

  it('exits 2 on missing arguments', () => {
    const err = vi.spyOn(console, 'error').mockImplementation(() => {});
    try {
      expect(run([])).toBe(2);
      expect(run(['--in', 'somewhere'])).toBe(2);
    } finally {
      err.mockRestore();
    }
  });

  it('exits 66 when the input directory is missing', () => {
    const err = vi.spyOn(console, 'error').mockImplementation(() => {});
    try {
      expect(run(['--in', '/no/such/dir', '--out', tempDir()])).toBe(66);
    } finally {
      err.mockRestore();
    }
  });

  it('exits 65 on schema drift', () => {
    const inDir = writeInputDir();
    // drop the error column from the first table
    const lines = THM1_OK.trimEnd().split('\n').map((line) => {
      const cells = line.split(',');
      cells.splice(3, 1);
      return cells.join(',');
    });
    writeFileSync(join(inDir, 'thm1.csv'), lines.join('\n') + '\n');
    const err = vi.spyOn(console, 'error').mockImplementation(() => {});
    try {
      expect(run(['--in', inDir, '--out', tempDir()])).toBe(65);
    } finally {
      expect(err).toHaveBeenCalledWith(expect.stringContaining('e_alpha'));
      err.mockRestore();
    }
  });

  it('exits 65 when data and verdicts disagree', () => {
    const inDir = writeInputDir();
    writeFileSync(join(inDir, 'thm1.csv'), THM1_OK.replace('7e-06', '9e-05'));
    const err = vi.spyOn(console, 'error').mockImplementation(() => {});
    try {
      expect(run(['--in', inDir, '--out', tempDir()])).toBe(65);
      expect(err).toHaveBeenCalledWith(expect.stringContaining('VerdictMismatch'));
    } finally {
      err.mockRestore();
    }
  });
});
