import { mkdtempSync, writeFileSync } from 'fs';
import { tmpdir } from 'os';
import { join } from 'path';

export const THM1_OK = [
  'case_id,alpha,t_end,e_alpha,order_p,C1,verdict',
  'alpha0.125000,0.125,0.2,7e-06,1.99,1.0,pass',
  'alpha0.250000,0.25,0.2,2.8e-05,1.98,1.0,pass',
  'alpha0.500000,0.5,0.2,1.05e-04,,1.0,pass',
].join('\n') + '\n';

export const PROP1_OK = [
  'case_id,alpha,t,r_t,ratio,F_value,C_bound,Hs_u0,verdict',
  'alpha0.000000-sine-t0.00625,0.0,0.00625,3.3e-06,,2.0,0.04,1.0,pass',
  'alpha0.000000-sine-t0.01250,0.0,0.0125,1.3e-05,4.0,2.0,0.04,1.0,pass',
  'alpha0.000000-sine-t0.02500,0.0,0.025,5.3e-05,4.0,2.0,0.04,1.0,pass',
  'alpha0.000000-sine-t0.05000,0.0,0.05,2.1e-04,4.0,2.0,0.04,1.0,pass',
].join('\n') + '\n';

export const THM2_OK = [
  'case_id,n,alpha,t0,d_n,E_gap_norm,taylor_residual,Hs_u0,breakdown_margin,verdict',
  'n04,4,0.0625,0.02,1.83e-03,0.091,2.1e-05,0.476,1558.0,pass',
  'n04-control,4,0.0625,0.02,3.4e-04,0.017,4.9e-07,0.476,1578.0,pass',
  'n05,5,0.03125,0.02,1.80e-03,0.090,1.9e-05,0.475,3119.0,pass',
  'n05-control,5,0.03125,0.02,1.7e-04,0.008,1.2e-07,0.475,3159.0,pass',
].join('\n') + '\n';

export const THM2_SUMMARY_OK = JSON.stringify({
  experiment: 'thm2',
  constants: { eta0: 2.24e-4 },
  verdicts: { 'nonuniform-floor': true },
}) + '\n';

/** Write a complete consistent input directory; returns its path. */
export function writeInputDir(): string {
  const dir = mkdtempSync(join(tmpdir(), 'figures-'));
  writeFileSync(join(dir, 'thm1.csv'), THM1_OK);
  writeFileSync(join(dir, 'prop1.csv'), PROP1_OK);
  writeFileSync(join(dir, 'thm2.csv'), THM2_OK);
  writeFileSync(join(dir, 'thm2.summary.json'), THM2_SUMMARY_OK);
  return dir;
}

export function tempDir(): string {
  return mkdtempSync(join(tmpdir(), 'figures-out-'));
}
