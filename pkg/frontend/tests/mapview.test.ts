import { describe, expect, it } from 'vitest';

import { projectOverlay, toSvg } from '../src/mapview.js';
import type { GeoJsonCollection } from '../src/types.js';

const overlay: GeoJsonCollection = {
  type: 'FeatureCollection',
  features: [
    {
      type: 'Feature',
      geometry: { type: 'LineString', coordinates: [[-122.3, 47.6], [-117.4, 47.7]] },
      properties: { edge_id: 1, mode: 'Highway', depart_hours: 0, arrive_hours: 2 },
    },
    {
      type: 'Feature',
      geometry: { type: 'LineString', coordinates: [[-117.4, 47.7], [-81.4, 28.5]] },
      properties: { edge_id: 15, mode: 'Rail', depart_hours: 2.75, arrive_hours: 30 },
    },
    {
      type: 'Feature',
      geometry: { type: 'Point', coordinates: [-117.4, 47.7] },
      properties: { node_id: 3, from_mode: 'Highway', to_mode: 'Rail' },
    },
    {
      type: 'Feature',
      geometry: { type: 'Point', coordinates: [-122.3, 47.6] },
      properties: { role: 'origin' },
    },
    {
      type: 'Feature',
      geometry: { type: 'Point', coordinates: [-81.4, 28.5] },
      properties: { role: 'destination' },
    },
  ],
};

describe('map projection', () => {
  it('projects every feature and keeps modes visually distinct', () => {
    const primitives = projectOverlay(overlay, 720, 420);
    expect(primitives).toHaveLength(5);
    const classes = primitives.map((p) => p.className);
    expect(classes).toContain('leg-highway');
    expect(classes).toContain('leg-rail');
    expect(classes).toContain('marker-transfer');
    expect(classes).toContain('marker-origin');
    expect(classes).toContain('marker-destination');
    expect(new Set(classes).size).toBe(5);
  });

  it('fits coordinates into the viewport with north up', () => {
    const primitives = projectOverlay(overlay, 720, 420, 24);
    for (const prim of primitives) {
      const points = prim.kind === 'line' ? prim.points : [[prim.x, prim.y] as [number, number]];
      for (const [x, y] of points) {
        expect(x).toBeGreaterThanOrEqual(24);
        expect(x).toBeLessThanOrEqual(720 - 24);
        expect(y).toBeGreaterThanOrEqual(24);
        expect(y).toBeLessThanOrEqual(420 - 24);
      }
    }
    // Seattle (47.6N) must sit above Orlando (28.5N)
    const origin = primitives.find((p) => p.className === 'marker-origin');
    const destination = primitives.find((p) => p.className === 'marker-destination');
    if (origin?.kind !== 'marker' || destination?.kind !== 'marker') throw new Error('markers missing');
    expect(origin.y).toBeLessThan(destination.y);
  });

  it('renders svg with one element per primitive', () => {
    const svg = toSvg(projectOverlay(overlay));
    expect(svg).toContain('<svg');
    expect((svg.match(/<polyline/g) ?? []).length).toBe(2);
    expect((svg.match(/<circle/g) ?? []).length).toBe(3);
    expect(svg).toContain('class="leg-rail"');
  });

  it('handles an empty overlay', () => {
    expect(projectOverlay({ type: 'FeatureCollection', features: [] })).toEqual([]);
  });
});
