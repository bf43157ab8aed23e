import { scaleLinear, scaleLog } from 'd3-scale';

export interface Series {
  label: string;
  points: Array<[number, number]>;
  color: string;
  dashed?: boolean;
}

export interface AxisOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  logX: boolean;
  logY: boolean;
  /** horizontal guide line, e.g. the eta0 floor */
  hLine?: { y: number; label: string };
  /** reference segment with fixed log-log slope, anchored at [x, y] */
  slopeGuide?: { anchor: [number, number]; slope: number; label: string };
}

const W = 640;
const H = 420;
const M = { top: 42, right: 24, bottom: 52, left: 76 };

function makeScale(log: boolean, domain: [number, number], range: [number, number]) {
  const pad = log ? 1.35 : 0.08 * (domain[1] - domain[0] || 1);
  const lo = log ? domain[0] / pad : domain[0] - pad;
  const hi = log ? domain[1] * pad : domain[1] + pad;
  return log
    ? scaleLog().domain([lo, hi]).range(range)
    : scaleLinear().domain([lo, hi]).range(range);
}

function fmtTick(v: number, log: boolean): string {
  if (log) return v.toExponential(0).replace('e', 'e');
  return Number.isInteger(v) ? String(v) : v.toPrecision(3);
}

function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

/** Compose a complete standalone SVG chart from data series. */
export function chart(series: Series[], opts: AxisOptions): string {
  const xs = series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = series.flatMap((s) => s.points.map((p) => p[1]));
  if (opts.hLine) ys.push(opts.hLine.y);
  const x = makeScale(opts.logX, [Math.min(...xs), Math.max(...xs)], [M.left, W - M.right]);
  const y = makeScale(opts.logY, [Math.min(...ys), Math.max(...ys)], [H - M.bottom, M.top]);

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
    `viewBox="0 0 ${W} ${H}" font-family="sans-serif" font-size="12">`,
  );
  out.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  out.push(
    `<text x="${W / 2}" y="22" text-anchor="middle" font-size="15">` +
    `${esc(opts.title)}</text>`,
  );

  const xTicks = opts.logX
    ? x.ticks().filter((v: number) => Number.isInteger(Math.log10(v)))
    : x.ticks(7);
  const yTicks = opts.logY
    ? y.ticks().filter((v: number) => Number.isInteger(Math.log10(v)))
    : y.ticks(6);
  for (const v of xTicks) {
    const px = x(v);
    out.push(
      `<line x1="${px}" y1="${M.top}" x2="${px}" y2="${H - M.bottom}" ` +
      `stroke="#ddd"/>`,
      `<text x="${px}" y="${H - M.bottom + 18}" text-anchor="middle">` +
      `${fmtTick(v, opts.logX)}</text>`,
    );
  }
  for (const v of yTicks) {
    const py = y(v);
    out.push(
      `<line x1="${M.left}" y1="${py}" x2="${W - M.right}" y2="${py}" ` +
      `stroke="#ddd"/>`,
      `<text x="${M.left - 8}" y="${py + 4}" text-anchor="end">` +
      `${fmtTick(v, opts.logY)}</text>`,
    );
  }
  out.push(
    `<rect x="${M.left}" y="${M.top}" width="${W - M.left - M.right}" ` +
    `height="${H - M.top - M.bottom}" fill="none" stroke="#444"/>`,
    `<text x="${(M.left + W - M.right) / 2}" y="${H - 12}" ` +
    `text-anchor="middle">${esc(opts.xLabel)}</text>`,
    `<text x="18" y="${(M.top + H - M.bottom) / 2}" text-anchor="middle" ` +
    `transform="rotate(-90 18 ${(M.top + H - M.bottom) / 2})">` +
    `${esc(opts.yLabel)}</text>`,
  );

  if (opts.hLine) {
    const py = y(opts.hLine.y);
    out.push(
      `<line x1="${M.left}" y1="${py}" x2="${W - M.right}" y2="${py}" ` +
      `stroke="#c22" stroke-dasharray="6 4" stroke-width="1.5"/>`,
      `<text x="${W - M.right - 4}" y="${py - 6}" text-anchor="end" ` +
      `fill="#c22">${esc(opts.hLine.label)}</text>`,
    );
  }
  if (opts.slopeGuide) {
    const [ax, ay] = opts.slopeGuide.anchor;
    const bx = Math.max(...xs);
    const by = ay * Math.pow(bx / ax, opts.slopeGuide.slope);
    out.push(
      `<line x1="${x(ax)}" y1="${y(ay)}" x2="${x(bx)}" y2="${y(by)}" ` +
      `stroke="#888" stroke-dasharray="4 4"/>`,
      `<text x="${x(bx) - 4}" y="${y(by) + 14}" text-anchor="end" ` +
      `fill="#888">${esc(opts.slopeGuide.label)}</text>`,
    );
  }

  series.forEach((s, idx) => {
    const path = s.points
      .map(([px, py], i) => `${i === 0 ? 'M' : 'L'}${x(px)},${y(py)}`)
      .join(' ');
    const dash = s.dashed ? ' stroke-dasharray="5 3"' : '';
    out.push(
      `<path d="${path}" fill="none" stroke="${s.color}" stroke-width="1.8"${dash}/>`,
    );
    for (const [px, py] of s.points) {
      out.push(`<circle cx="${x(px)}" cy="${y(py)}" r="3.2" fill="${s.color}"/>`);
    }
    out.push(
      `<text x="${M.left + 10}" y="${M.top + 16 + 16 * idx}" fill="${s.color}">` +
      `${esc(s.label)}</text>`,
    );
  });

  out.push('</svg>');
  return out.join('\n') + '\n';
}
